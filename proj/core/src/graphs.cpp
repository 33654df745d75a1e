#include "sg/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <string>

#include "sg/errors.hpp"

namespace sg {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    add_edge(u, v);
  }
}

Graph Graph::from_adjacency(const Matrix& adj) {
  if (!adj.square()) {
    throw InputError("adjacency matrix must be square");
  }
  const std::size_t n = adj.rows();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (adj(i, i) != 0.0) {
      throw InputError("adjacency matrix has a nonzero diagonal entry");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = adj(i, j);
      if (a != adj(j, i)) {
        throw InputError("adjacency matrix is not symmetric");
      }
      if (a != 0.0 && a != 1.0) {
        throw InputError("adjacency matrix is not 0/1");
      }
      if (a == 1.0) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw InputError("edge endpoint out of range");
  }
  if (u == v) {
    throw InputError("loops are not allowed");
  }
  if (adj_[u * n_ + v] == 0) {
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
    ++edge_count_;
  }
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count(adj_.begin() + v * n_, adj_.begin() + (v + 1) * n_, std::uint8_t{1}));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(v, u)) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) {
    d[v] = degree(v);
  }
  return d;
}

long Graph::regular_degree() const {
  if (n_ == 0) {
    return -1;
  }
  const auto d = degrees();
  return std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d[0]; })
             ? static_cast<long>(d[0])
             : -1;
}

Matrix Graph::adjacency() const {
  Matrix a(n_, n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (adj_[i] != 0) {
      a(i / n_, i % n_) = 1.0;
    }
  }
  return a;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) {
        c.add_edge(u, v);
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kG6Bias = 63;

bool g6_char_ok(char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) {
    text.remove_prefix(10);
  }
  if (text.empty()) {
    throw ParseError("graph6: empty input at byte 0", 0);
  }
  if (text[0] == ':' || text[0] == ';') {
    throw ParseError("graph6: sparse6 encoding is not supported (byte 0)", 0);
  }
  if (text[0] == '&') {
    throw ParseError("graph6: digraph6 encoding (directed edges) rejected (byte 0)", 0);
  }

  std::size_t pos = 0;
  auto next = [&](const char* what) -> int {
    if (pos >= text.size()) {
      throw ParseError("graph6: truncated " + std::string(what) + " at byte " +
                           std::to_string(pos),
                       pos);
    }
    const char c = text[pos];
    if (!g6_char_ok(c)) {
      throw ParseError("graph6: invalid character at byte " + std::to_string(pos), pos);
    }
    ++pos;
    return c - kG6Bias;
  };

  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(next("header"));
  } else {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      throw ParseError("graph6: 8-byte order header exceeds the supported maximum (byte 1)", 1);
    }
    for (int i = 0; i < 3; ++i) {
      n = (n << 6) | static_cast<std::size_t>(next("header"));
    }
  }
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds maximum " +
                         std::to_string(kMaxGraph6Order) + " (byte 0)",
                     0);
  }

  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t header_end = pos;
  const std::size_t expected = header_end + (bits + 5) / 6;
  int chunk = 0;
  int remaining = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (remaining == 0) {
        chunk = next("bit stream");
        remaining = 6;
      }
      --remaining;
      if ((chunk >> remaining) & 1) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (text.size() != expected) {
    throw ParseError("graph6: unexpected trailing data at byte " + std::to_string(expected),
                     expected);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw InputError("graph6: order exceeds supported maximum");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kG6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kG6Bias));
  }
  return out;
}

// ---------------------------------------------------------------------------
// named graphs

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw InputError("cycle(n) requires n >= 3");
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return g;
}

Graph path_graph(std::size_t n) {
  if (n < 1) {
    throw InputError("path(n) requires n >= 1");
  }
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  if (n < 1) {
    throw InputError("complete(n) requires n >= 1");
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

Graph empty_graph(std::size_t n) {
  if (n < 1) {
    throw InputError("empty(n) requires n >= 1");
  }
  return Graph(n);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) {
    throw InputError("complete_bipartite(a,b) requires a, b >= 1");
  }
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

using Poly = std::vector<int>; // coefficients c_0..c_{deg}, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // enumerate monic divisors of degree d
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      count *= static_cast<std::size_t>(p);
    }
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) {
        return false;
      }
    }
  }
  return true;
}

// First monic irreducible of degree e, scanning lower coefficients in
// increasing base-p order.
Poly find_irreducible(int p, std::size_t e) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < e; ++i) {
    count *= static_cast<std::size_t>(p);
  }
  for (std::size_t code = 0; code < count; ++code) {
    Poly f(e + 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < e; ++i) {
      f[i] = static_cast<int>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    f[e] = 1;
    if (is_irreducible(f, p)) {
      return f;
    }
  }
  throw NumericError("no irreducible polynomial found");
}

bool is_prime(std::size_t p) {
  if (p < 2) {
    return false;
  }
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

} // namespace

Graph paley_graph(std::size_t q) {
  if (q < 5 || q > kMaxGraph6Order) {
    throw InputError("paley(q) requires a prime power 5 <= q <= 10000 with q = 1 mod 4");
  }
  if (q % 4 != 1) {
    throw InputError("paley(q) requires q = 1 mod 4, got " + std::to_string(q));
  }
  std::size_t p = 2;
  while (q % p != 0) {
    ++p;
  }
  std::size_t e = 0;
  std::size_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) {
    throw InputError("paley(q) requires a prime power, got " + std::to_string(q));
  }
  const int ip = static_cast<int>(p);
  const Poly modulus = find_irreducible(ip, e);

  auto to_poly = [&](std::size_t idx) {
    Poly a(e);
    for (std::size_t i = 0; i < e; ++i) {
      a[i] = static_cast<int>(idx % p);
      idx /= p;
    }
    return a;
  };
  auto to_index = [&](const Poly& a) {
    std::size_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      idx = idx * p + static_cast<std::size_t>(a[i]);
    }
    return idx;
  };

  std::vector<std::uint8_t> square(q, 0);
  for (std::size_t x = 1; x < q; ++x) {
    const Poly a = to_poly(x);
    Poly prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * a[j]) % ip;
      }
    }
    Poly r = poly_mod(prod, modulus, ip);
    r.resize(e, 0);
    square[to_index(r)] = 1;
  }

  Graph g(q);
  for (std::size_t x = 0; x < q; ++x) {
    const Poly a = to_poly(x);
    for (std::size_t y = x + 1; y < q; ++y) {
      const Poly b = to_poly(y);
      Poly diff(e);
      for (std::size_t i = 0; i < e; ++i) {
        diff[i] = ((a[i] - b[i]) % ip + ip) % ip;
      }
      if (square[to_index(diff)] != 0) {
        g.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
  }
  return g;
}

Graph hamming_graph(std::size_t d, std::size_t q) {
  if (d < 1 || q < 2) {
    throw InputError("hamming(d,q) requires d >= 1 and q >= 2");
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= q;
    if (n > kMaxGraph6Order) {
      throw InputError("hamming(d,q): q^d exceeds 10000 vertices");
    }
  }
  Graph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t place = 1;
    for (std::size_t coord = 0; coord < d; ++coord) {
      const std::size_t digit = (x / place) % q;
      for (std::size_t other = digit + 1; other < q; ++other) {
        const std::size_t y = x + (other - digit) * place;
        g.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
      place *= q;
    }
  }
  return g;
}

Graph hypercube_graph(std::size_t d) { return hamming_graph(d, 2); }

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::size_t> parse_params(std::string_view desc, std::string_view body) {
  std::vector<std::size_t> out;
  body = trim_view(body);
  if (body.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok =
        trim_view(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("named graph '" + std::string(desc) + "': parameter '" +
                       std::string(tok) + "' is not a non-negative integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

} // namespace

Graph named_graph(std::string_view desc) {
  const std::string_view s = trim_view(desc);
  std::string_view name = s;
  std::vector<std::size_t> params;
  if (const auto open = s.find('('); open != std::string_view::npos) {
    if (s.back() != ')') {
      throw InputError("named graph '" + std::string(desc) + "': missing closing parenthesis");
    }
    name = trim_view(s.substr(0, open));
    params = parse_params(desc, s.substr(open + 1, s.size() - open - 2));
  }
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("named graph '" + std::string(name) + "' expects " +
                       std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (name == "cycle") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    want(1);
    return path_graph(params[0]);
  }
  if (name == "complete") {
    want(1);
    return complete_graph(params[0]);
  }
  if (name == "empty") {
    want(1);
    return empty_graph(params[0]);
  }
  if (name == "complete_bipartite") {
    want(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (name == "petersen") {
    want(0);
    return petersen_graph();
  }
  if (name == "paley") {
    want(1);
    return paley_graph(params[0]);
  }
  if (name == "hamming") {
    want(2);
    return hamming_graph(params[0], params[1]);
  }
  if (name == "hypercube") {
    want(1);
    return hypercube_graph(params[0]);
  }
  throw InputError("unknown named graph '" + std::string(name) +
                   "' (supported: cycle, path, complete, empty, complete_bipartite, "
                   "petersen, paley, hamming, hypercube)");
}

// ---------------------------------------------------------------------------
// operators

Matrix laplacian(const Graph& g) {
  Matrix l = g.adjacency() * -1.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    l(v, v) = static_cast<double>(g.degree(v));
  }
  return l;
}

Matrix signless_laplacian(const Graph& g) {
  Matrix k = g.adjacency();
  for (Vertex v = 0; v < g.order(); ++v) {
    k(v, v) = static_cast<double>(g.degree(v));
  }
  return k;
}

std::vector<Edge> cut_edges(const Graph& g, std::span<const Vertex> side) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Vertex v : side) {
    if (v >= g.order()) {
      throw InputError("cut_edges: vertex out of range");
    }
    in[v] = 1;
  }
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (in[e.first] != in[e.second]) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<int> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> dist(n * n, -1);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) {
    nbrs[v] = g.neighbors(v);
  }
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    int* row = dist.data() + s * n;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : nbrs[u]) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) {
    return false;
  }
  const auto dist = distance_matrix(g);
  return std::none_of(dist.begin(), dist.begin() + static_cast<long>(g.order()),
                      [](int d) { return d < 0; });
}

std::size_t diameter(const Graph& g) {
  const auto dist = distance_matrix(g);
  if (g.order() == 0 || std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw InputError("graph is disconnected");
  }
  return static_cast<std::size_t>(*std::max_element(dist.begin(), dist.end()));
}

std::vector<Graph> distance_graphs(const Graph& g) {
  const std::size_t n = g.order();
  const auto dist = distance_matrix(g);
  if (n == 0 || std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw InputError("distance_graphs: graph is disconnected");
  }
  const int diam = *std::max_element(dist.begin(), dist.end());
  std::vector<Graph> out(static_cast<std::size_t>(diam), Graph(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      out[static_cast<std::size_t>(dist[u * n + v] - 1)].add_edge(u, v);
    }
  }
  return out;
}

} // namespace sg
