#include "tourney/tournament.hpp"

#include <bit>
#include <charconv>

#include "tourney/codes.hpp"
#include "tourney/errors.hpp"

namespace tourney {

namespace {

VertexSet bit(int v) { return VertexSet{1} << v; }

VertexSet low_mask(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

void check_order(int n) {
  if (n < 1 || n > Tournament::kMaxOrder) {
    throw InputError("tournament order must be in [1, 64], got " + std::to_string(n));
  }
}

}  // namespace

Tournament::Tournament(int n) : n_(n) {
  check_order(n);
  out_.assign(static_cast<std::size_t>(n), 0);
  // bit 0 for every pair means j -> i when i < j
  for (int v = 1; v < n; ++v) out_[v] = low_mask(v);
}

Tournament Tournament::from_bits(int n, std::span<const std::uint8_t> bits) {
  check_order(n);
  if (static_cast<int>(bits.size()) != pair_count(n)) {
    throw InputError("expected " + std::to_string(pair_count(n)) + " arc bits for n=" +
                     std::to_string(n) + ", got " + std::to_string(bits.size()));
  }
  Tournament t(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (bits[k] > 1) throw InputError("arc bits must be 0 or 1");
      if (bits[k]) t.orient(i, j);
    }
  }
  return t;
}

Tournament Tournament::from_adjacency(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("adjacency matrix is not square");
    if (rows[i][i] != 0) throw InputError("adjacency matrix has a nonzero diagonal entry");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = rows[i][j];
      const int b = rows[j][i];
      if (a + b != 1 || a < 0 || b < 0) {
        throw InputError("A + A^T != J - I at (" + std::to_string(i) + "," + std::to_string(j) +
                         ")");
      }
      if (a == 1) t.orient(i, j);
    }
  }
  return t;
}

Tournament Tournament::parse(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw InputError("missing ':' in tournament line");
  int n = 0;
  const auto head = line.substr(0, colon);
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size()) {
    throw InputError("bad vertex count '" + std::string(head) + "'");
  }
  std::vector<std::uint8_t> bits;
  for (char c : line.substr(colon + 1)) {
    if (c != '0' && c != '1') throw InputError(std::string("bad arc character '") + c + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return from_bits(n, bits);
}

VertexSet Tournament::in_set(int v) const { return all_vertices() & ~out_[v] & ~bit(v); }

int Tournament::out_degree(int v) const { return std::popcount(out_[v]); }

VertexSet Tournament::all_vertices() const { return low_mask(n_); }

void Tournament::orient(int from, int to) {
  out_[from] |= bit(to);
  out_[to] &= ~bit(from);
}

std::vector<std::uint8_t> Tournament::bits() const {
  std::vector<std::uint8_t> b;
  b.reserve(static_cast<std::size_t>(pair_count(n_)));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) b.push_back(arc(i, j) ? 1 : 0);
  }
  return b;
}

std::string Tournament::to_line() const {
  std::string s = std::to_string(n_) + ":";
  for (auto b : bits()) s.push_back(b ? '1' : '0');
  return s;
}

Tournament Tournament::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InputError("permutation size mismatch");
  Tournament t(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (arc(u, v)) {
        t.orient(perm[u], perm[v]);
      } else {
        t.orient(perm[v], perm[u]);
      }
    }
  }
  return t;
}

std::vector<Tournament> read_catalog(std::istream& in) {
  std::vector<Tournament> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(Tournament::parse(line));
    } catch (const InputError& e) {
      throw ParseError(number, e.what());
    }
  }
  return out;
}

Tournament build(int n, std::span<const std::uint8_t> arc_bits) {
  return Tournament::from_bits(n, arc_bits);
}

IntMatrix::IntMatrix(int n, MatrixRole role)
    : n_(n), role_(role), a_(static_cast<std::size_t>(n) * n, 0) {}

bool IntMatrix::is_symmetric() const {
  for (int r = 0; r < n_; ++r) {
    for (int c = r + 1; c < n_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

IntMatrix adjacency(const Tournament& t) {
  IntMatrix a(t.order(), MatrixRole::Adjacency);
  for (int u = 0; u < t.order(); ++u) {
    for (int v = 0; v < t.order(); ++v) a(u, v) = t.arc(u, v) ? 1 : 0;
  }
  return a;
}

IntMatrix skew_part(const Tournament& t) {
  IntMatrix k(t.order(), MatrixRole::SkewPart);
  for (int u = 0; u < t.order(); ++u) {
    for (int v = 0; v < t.order(); ++v) {
      if (u != v) k(u, v) = t.arc(u, v) ? 1 : -1;
    }
  }
  return k;
}

IntMatrix seidel_squared(const Tournament& t) {
  const int n = t.order();
  const IntMatrix k = skew_part(t);
  IntMatrix s2(n, MatrixRole::SeidelSquared);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      long long sum = 0;
      for (int w = 0; w < n; ++w) sum += k(u, w) * k(w, v);
      s2(u, v) = -sum;
      s2(v, u) = -sum;
    }
  }
  return s2;
}

Tournament switched(const Tournament& t, VertexSet subset) {
  const VertexSet all = t.all_vertices();
  subset &= all;
  Tournament out = t;
  for (int u = 0; u < t.order(); ++u) {
    const VertexSet other_side = (subset & bit(u)) ? (all & ~subset) : subset;
    for (VertexSet rest = other_side; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (u < v) {
        if (t.arc(u, v)) {
          out.orient(v, u);
        } else {
          out.orient(u, v);
        }
      }
    }
  }
  return out;
}

Tournament dominated_extension(const Tournament& t) {
  const int n = t.order();
  if (n + 1 > Tournament::kMaxOrder) throw InputError("extension exceeds the maximum order");
  Tournament out(n + 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (t.arc(u, v)) {
        out.orient(u, v);
      } else {
        out.orient(v, u);
      }
    }
    out.orient(u, n);
  }
  return out;
}

Tournament delete_vertex(const Tournament& t, int v) {
  const int n = t.order();
  if (n < 2) throw InputError("cannot delete a vertex from a 1-vertex tournament");
  if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<int> keep;
  for (int u = 0; u < n; ++u) {
    if (u != v) keep.push_back(u);
  }
  Tournament out(n - 1);
  for (int a = 0; a < n - 1; ++a) {
    for (int b = a + 1; b < n - 1; ++b) {
      if (t.arc(keep[a], keep[b])) {
        out.orient(a, b);
      } else {
        out.orient(b, a);
      }
    }
  }
  return out;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

Tournament paley_tournament(int q) {
  if (!is_prime(q) || q % 4 != 3) {
    throw InputError("Paley tournament needs a prime q = 3 (mod 4), got " + std::to_string(q));
  }
  if (q > Tournament::kMaxOrder) throw InputError("Paley order exceeds the maximum order");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = true;
  Tournament t(q);
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (residue[static_cast<std::size_t>((j - i) % q)]) {
        t.orient(i, j);
      } else {
        t.orient(j, i);
      }
    }
  }
  return t;
}

Tournament d_optimal_block(const Tournament& first, const Tournament& second) {
  const int d = first.order();
  if (second.order() != d) throw InputError("d_optimal_block needs blocks of equal order");
  if (!is_doubly_regular(first) || !is_doubly_regular(second)) {
    throw InputError("d_optimal_block needs doubly regular blocks");
  }
  Tournament t(2 * d);
  for (int u = 0; u < 2 * d; ++u) {
    for (int v = u + 1; v < 2 * d; ++v) {
      bool forward;
      if (v < d) {
        forward = first.arc(u, v);
      } else if (u >= d) {
        forward = second.arc(u - d, v - d);
      } else {
        forward = true;
      }
      if (forward) {
        t.orient(u, v);
      } else {
        t.orient(v, u);
      }
    }
  }
  return t;
}

}  // namespace tourney
