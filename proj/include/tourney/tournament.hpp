#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

/// Bit set of vertices; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

/// An orientation of the complete graph on n vertices.
///
/// Every unordered pair carries exactly one arc, so the value cannot be put
/// into an invalid state. Rows are stored as out-neighbour masks, which caps
/// the order at 64 vertices.
class Tournament {
 public:
  static constexpr int kMaxOrder = 64;

  /// The n-vertex tournament with every arc j -> i for i < j (all pair bits 0).
  explicit Tournament(int n = 1);

  /// Builds from the upper-triangle pattern in row-major pair order
  /// (0,1),(0,2),...,(0,n-1),(1,2),...; bit 1 means arc i -> j for i < j.
  static Tournament from_bits(int n, std::span<const std::uint8_t> bits);

  /// Builds from a 0/1 adjacency matrix given row by row. Throws InputError
  /// unless A + A^T = J - I.
  static Tournament from_adjacency(const std::vector<std::vector<int>>& rows);

  /// Parses the text form `<n>:<bitstring>`.
  static Tournament parse(std::string_view line);

  int order() const { return n_; }
  bool arc(int from, int to) const { return (out_[from] >> to) & 1U; }
  VertexSet out_set(int v) const { return out_[v]; }
  VertexSet in_set(int v) const;
  int out_degree(int v) const;
  VertexSet all_vertices() const;

  /// Points the arc between `from` and `to` from `from` to `to`.
  void orient(int from, int to);

  std::vector<std::uint8_t> bits() const;
  /// The text form `<n>:<bitstring>`.
  std::string to_line() const;

  /// The tournament on the same vertex set with vertex v renamed perm[v].
  Tournament relabeled(std::span<const int> perm) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_;
  std::vector<VertexSet> out_;
};

/// Number of unordered vertex pairs, n(n-1)/2.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// build(n, bits) with a length check.
Tournament build(int n, std::span<const std::uint8_t> arc_bits);

enum class MatrixRole { Adjacency, SkewPart, SeidelSquared };

/// Dense square integer matrix tagged with the role it plays.
class IntMatrix {
 public:
  IntMatrix(int n, MatrixRole role);

  int size() const { return n_; }
  MatrixRole role() const { return role_; }
  long long& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  long long operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  MatrixRole role_;
  std::vector<long long> a_;
};

IntMatrix adjacency(const Tournament& t);
/// K = A - A^T.
IntMatrix skew_part(const Tournament& t);
/// S^2 = -(A - A^T)^2 for S = i(A - A^T); symmetric with diagonal n - 1.
IntMatrix seidel_squared(const Tournament& t);

/// Reverses every arc between `subset` and its complement.
Tournament switched(const Tournament& t, VertexSet subset);

/// Adds vertex n that every existing vertex points to.
Tournament dominated_extension(const Tournament& t);

/// Induced subtournament on all vertices except v, keeping relative order.
Tournament delete_vertex(const Tournament& t, int v);

/// Quadratic-residue tournament on Z_q: i -> j iff j - i is a nonzero square.
/// Requires q prime with q = 3 (mod 4).
Tournament paley_tournament(int q);

/// The 2d-vertex tournament with adjacency [[A1, J], [0, A2]] built from two
/// doubly regular tournaments of the same order d.
Tournament d_optimal_block(const Tournament& first, const Tournament& second);

bool is_prime(int q);

/// Reads one `<n>:<bitstring>` tournament per line. Blank lines and lines
/// starting with '#' are skipped. Throws ParseError with the line number.
std::vector<Tournament> read_catalog(std::istream& in);

}  // namespace tourney
