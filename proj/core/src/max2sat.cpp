#include "sg/max2sat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sg/errors.hpp"
#include "sg/oracles.hpp"

namespace sg {

void Max2SatInstance::validate() const {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.empty() || clause.size() > 2) {
      throw InputError("clause " + std::to_string(c + 1) +
                       (clause.empty() ? " is empty" : " exceeds 2 literals"));
    }
    for (Literal l : clause) {
      const auto v = static_cast<std::size_t>(std::abs(static_cast<long>(l)));
      if (v == 0 || v > n_vars) {
        throw InputError("clause " + std::to_string(c + 1) + ": variable " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n_vars));
      }
    }
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

bool to_long(std::string_view s, long& out) {
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

} // namespace

Max2SatInstance parse_dimacs(std::string_view text) {
  Max2SatInstance inst;
  bool have_header = false;
  long declared = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
  };
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == 'c') {
      if (nl == std::string_view::npos) break;
      continue;
    }
    if (tokens[0] == "%") {
      break; // SATLIB trailer
    }
    if (tokens[0] == "p") {
      if (have_header) {
        throw fail("duplicate header");
      }
      if (tokens.size() >= 2 && tokens[1] == "wcnf") {
        throw fail("weighted DIMACS (wcnf) is not supported");
      }
      long nv = 0;
      if (tokens.size() != 4 || tokens[1] != "cnf" || !to_long(tokens[2], nv) ||
          !to_long(tokens[3], declared) || nv < 0 || declared < 0) {
        throw fail("malformed header, expected 'p cnf <variables> <clauses>'");
      }
      inst.n_vars = static_cast<std::size_t>(nv);
      have_header = true;
      if (nl == std::string_view::npos) break;
      continue;
    }
    if (!have_header) {
      throw fail("clause before 'p cnf' header");
    }
    for (auto tok : tokens) {
      long lit = 0;
      if (!to_long(tok, lit)) {
        throw fail("invalid literal '" + std::string(tok) + "'");
      }
      if (lit == 0) {
        if (current.empty()) {
          throw fail("empty clause");
        }
        inst.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long var = std::labs(lit);
      if (var > static_cast<long>(inst.n_vars)) {
        throw fail("variable " + std::to_string(var) + " out of range 1.." +
                   std::to_string(inst.n_vars));
      }
      if (current.size() == 2) {
        throw fail("clause exceeds 2 literals");
      }
      current.push_back(static_cast<Literal>(lit));
    }
    if (nl == std::string_view::npos) break;
  }
  if (!have_header) {
    throw fail("missing 'p cnf' header");
  }
  if (!current.empty()) {
    throw fail("last clause is not terminated by 0");
  }
  if (static_cast<long>(inst.clauses.size()) != declared) {
    throw fail("header declares " + std::to_string(declared) + " clauses but " +
               std::to_string(inst.clauses.size()) + " were found");
  }
  return inst;
}

std::size_t count_satisfied(const Max2SatInstance& inst, const std::vector<bool>& truth) {
  std::size_t count = 0;
  for (const auto& clause : inst.clauses) {
    for (Literal l : clause) {
      if (truth[static_cast<std::size_t>(std::abs(l)) - 1] == (l > 0)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

namespace {

double lookup(const std::map<QuadraticForm::Pair, std::int64_t>& m, std::uint32_t i,
              std::uint32_t j) {
  const auto it = m.find({std::min(i, j), std::max(i, j)});
  return it == m.end() ? 0.0 : static_cast<double>(it->second) / 4.0;
}

} // namespace

double QuadraticForm::alpha_at(std::uint32_t i, std::uint32_t j) const { return lookup(alpha, i, j); }
double QuadraticForm::beta_at(std::uint32_t i, std::uint32_t j) const { return lookup(beta, i, j); }

std::int64_t QuadraticForm::evaluate_quarters(std::span<const int> x) const {
  if (x.size() != variables()) {
    throw InputError("QuadraticForm::evaluate: expected " + std::to_string(variables()) +
                     " values");
  }
  std::int64_t total = constant;
  for (const auto& [p, a] : alpha) {
    total += a * (1 - x[p.first] * x[p.second]);
  }
  for (const auto& [p, b] : beta) {
    total += b * (1 + x[p.first] * x[p.second]);
  }
  return total;
}

QuadraticForm encode(const Max2SatInstance& inst, EncodingStats* stats) {
  inst.validate();
  QuadraticForm q;
  q.n_vars = inst.n_vars;
  EncodingStats st;
  auto add = [&](std::uint32_t i, std::uint32_t j, bool agree, std::int64_t w) {
    // agree: the term is 1 + x_i x_j, otherwise 1 - x_i x_j
    auto& target = agree ? q.beta : q.alpha;
    target[{std::min(i, j), std::max(i, j)}] += w;
  };
  // v(l) = (1 + s x_0 x_i)/2 for the literal l = s * i
  auto unit = [&](Literal l) { add(0, static_cast<std::uint32_t>(std::abs(l)), l > 0, 2); };
  for (const auto& clause : inst.clauses) {
    if (clause.size() == 1) {
      ++st.unit;
      unit(clause[0]);
      continue;
    }
    const Literal l1 = clause[0];
    const Literal l2 = clause[1];
    if (l1 == l2) {
      ++st.duplicate_literals;
      unit(l1);
      continue;
    }
    if (l1 == -l2) {
      ++st.tautologies;
      q.constant += 4;
      continue;
    }
    ++st.binary;
    // v(l1 v l2) = [(1 + s1 x0 xi) + (1 + s2 x0 xj) + (1 - s1 s2 xi xj)] / 4
    const auto i = static_cast<std::uint32_t>(std::abs(l1));
    const auto j = static_cast<std::uint32_t>(std::abs(l2));
    add(0, i, l1 > 0, 1);
    add(0, j, l2 > 0, 1);
    add(i, j, (l1 > 0) != (l2 > 0), 1);
  }
  if (stats != nullptr) {
    *stats = st;
  }
  return q;
}

QuadraticForm net_overlaps(const QuadraticForm& q) {
  QuadraticForm out = q;
  for (auto it = out.alpha.begin(); it != out.alpha.end();) {
    const auto bt = out.beta.find(it->first);
    if (bt == out.beta.end()) {
      ++it;
      continue;
    }
    const std::int64_t common = std::min(it->second, bt->second);
    out.constant += 2 * common;
    it->second -= common;
    bt->second -= common;
    if (bt->second == 0) {
      out.beta.erase(bt);
    }
    it = it->second == 0 ? out.alpha.erase(it) : std::next(it);
  }
  return out;
}

GraphPair to_graph_pair(const QuadraticForm& q) {
  const std::size_t n = q.variables();
  GraphPair out{Graph(n), Graph(n), false, 0.0, {}};
  std::set<std::int64_t> weights;
  for (const auto& [p, a] : q.alpha) {
    if (a != 0) {
      out.g1.add_edge(p.first, p.second);
      weights.insert(a);
    }
  }
  for (const auto& [p, b] : q.beta) {
    if (b != 0) {
      out.g2.add_edge(p.first, p.second);
      weights.insert(b);
      if (q.alpha_at(p.first, p.second) != 0.0) {
        out.overlap.push_back(p);
      }
    }
  }
  out.uniform = weights.size() == 1;
  out.weight = out.uniform ? static_cast<double>(*weights.begin()) / 4.0 : 0.0;
  return out;
}

namespace {

Graph induced(const Graph& g, const std::vector<std::uint32_t>& keep) {
  std::vector<long> index(g.order(), -1);
  for (std::size_t t = 0; t < keep.size(); ++t) {
    index[keep[t]] = static_cast<long>(t);
  }
  Graph out(keep.size());
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      out.add_edge(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  return out;
}

} // namespace

Max2SatReport bound_pipeline(const Max2SatInstance& inst, const Max2SatOptions& opts) {
  Max2SatReport rep;
  rep.n_vars = inst.n_vars;
  rep.clauses = inst.clauses.size();
  rep.form = encode(inst, &rep.stats);
  rep.raw_pair = to_graph_pair(rep.form);
  rep.netted = net_overlaps(rep.form);
  rep.pair = to_graph_pair(rep.netted);

  for (std::uint32_t v = 0; v < rep.pair.g1.order(); ++v) {
    if (rep.pair.g1.degree(v) + rep.pair.g2.degree(v) > 0) {
      rep.active.push_back(v);
    }
  }
  const Graph g1 = induced(rep.pair.g1, rep.active);
  const Graph g2 = induced(rep.pair.g2, rep.active);
  const double constant = static_cast<double>(rep.netted.constant) / 4.0;

  if (rep.active.empty()) {
    rep.bounds_note = "no quadratic terms; objective is constant";
    rep.upper_bound = constant;
  } else if (!rep.pair.uniform) {
    rep.bounds_note = "bounds unavailable: edge weights are not uniform";
  } else if (g1.size() == 0) {
    rep.bounds_note = "bounds unavailable: first graph has no edges";
  } else {
    auto b = compute_bounds(g1, &g2, "alpha", "beta");
    if (b.available && b.gamma) {
      rep.upper_bound = constant + rep.pair.weight * *b.gamma;
    } else {
      rep.bounds_note = "bounds unavailable: " + b.reason;
    }
    rep.bounds = std::move(b);
  }

  if (!opts.oracle) {
    rep.oracle_note = "skipped (disabled)";
  } else if (inst.n_vars > opts.max_vars) {
    rep.oracle_note = "skipped (size)";
  } else {
    const auto sat = max2sat_bruteforce(inst, opts.max_vars);
    rep.optimum = sat.satisfied;
    rep.optimum_assignment = sat.truth;
    if (!rep.active.empty() && g1.order() <= std::max(opts.max_vars, kMaxCutOracleOrder) &&
        g1.order() <= 32) {
      rep.qp = qp_bruteforce(g1, g2, 32).value;
      if (rep.bounds && rep.bounds->gamma && *rep.bounds->gamma > 0.0) {
        rep.sandwich_ratio = static_cast<double>(*rep.qp) / *rep.bounds->gamma;
      }
    }
  }
  return rep;
}

} // namespace sg
