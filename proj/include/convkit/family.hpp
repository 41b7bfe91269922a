#pragma once

// Exact algebra of subsets, isotone families, filters and relations over
// finite ground sets.
//
// On a finite set every filter is principal: a filter F is closed under
// finite intersections and, the set of its members being finite, the
// intersection of all of its members is itself a member. Hence F = K↑ for
// K = ⋂F, and a filter is stored by its kernel K alone. K = ∅ is the
// degenerate filter 2^X, a first-class value that meshes nothing.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace convkit {

inline constexpr int max_ground_size = 16;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when values over different ground sets are combined.
class typing_error : public error {
 public:
  using error::error;
};

/// Raised by fixpoint loops that fail to stabilize; always a bug.
class internal_error : public error {
 public:
  using error::error;
};

struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset singleton(int i) { return Subset{1u << i}; }
  static constexpr Subset full(int n) { return Subset{n >= 32 ? ~0u : ((1u << n) - 1u)}; }

  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int i) const { return ((bits >> i) & 1u) != 0; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool meets(Subset o) const { return (bits & o.bits) != 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr int first() const { return std::countr_zero(bits); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
  constexpr Subset& operator|=(Subset o) { bits |= o.bits; return *this; }
  constexpr Subset& operator&=(Subset o) { bits &= o.bits; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

constexpr Subset complement(Subset s, int n) { return Subset::full(n) - s; }

template <class Fn>
constexpr void for_each_element(Subset s, Fn&& fn) {
  for (std::uint32_t b = s.bits; b != 0; b &= b - 1) fn(std::countr_zero(b));
}

/// Calls fn on every subset of `universe` (including ∅ and universe itself),
/// in ascending mask order.
template <class Fn>
constexpr void for_each_subset(Subset universe, Fn&& fn) {
  std::uint32_t s = 0;
  while (true) {
    fn(Subset{s});
    if (s == universe.bits) break;
    s = (s - universe.bits) & universe.bits;
  }
}

class GroundSet {
 public:
  /// Names must be unique and non-empty; 1..16 points.
  explicit GroundSet(std::vector<std::string> names);

  /// Points named a, b, c, ...
  static GroundSet indexed(int n);

  int size() const { return static_cast<int>(names_->size()); }
  Subset full() const { return Subset::full(size()); }
  const std::string& name(int i) const { return (*names_)[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// -1 when absent.
  int index_of(std::string_view name) const;

  bool fits(Subset s) const { return s.subset_of(full()); }
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Shared instance of GroundSet::indexed(n), for hot enumeration loops.
const GroundSet& indexed_ground(int n);

/// Ground of X×Y; the pair (x, y) has index x * |Y| + y.
GroundSet product(const GroundSet& x, const GroundSet& y);

constexpr int pair_index(int x, int y, int ny) { return x * ny + y; }

/// Isotone family stored as the antichain of its ⊆-minimal members.
class Family {
 public:
  static Family empty(const GroundSet& g) { return Family(g, {}); }
  static Family principal(const GroundSet& g, Subset s);
  /// The degenerate family 2^X, i.e. {∅}↑.
  static Family degenerate(const GroundSet& g) { return principal(g, Subset{}); }

  const GroundSet& ground() const { return ground_; }
  std::span<const Subset> minimals() const { return minimals_; }

  bool contains(Subset s) const;
  bool is_empty_family() const { return minimals_.empty(); }
  bool is_degenerate() const { return contains(Subset{}); }

  /// Every member of the represented family, ascending by mask.
  std::vector<Subset> members() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.ground_ == b.ground_ && a.minimals_ == b.minimals_;
  }

 private:
  Family(GroundSet g, std::vector<Subset> minimals)
      : ground_(std::move(g)), minimals_(std::move(minimals)) {}
  friend Family up_close(const GroundSet&, std::span<const Subset>);

  GroundSet ground_;
  std::vector<Subset> minimals_;  // sorted ascending, pairwise incomparable
};

/// A↑ as an antichain of minimal elements. Throws typing_error when a subset
/// does not fit the ground.
Family up_close(const GroundSet& g, std::span<const Subset> sets);
inline Family up_close(const GroundSet& g, std::initializer_list<Subset> sets) {
  return up_close(g, std::span<const Subset>(sets.begin(), sets.size()));
}

bool mesh(const Family& a, const Family& b);

/// All sets meeting every member of `a`.
Family grill(const Family& a);

/// o♮A = {o(A) : A ∈ A}↑. `o` need not be monotone, so it is applied to every
/// member rather than to minimal ones only.
Family family_op_image(const std::function<Subset(Subset)>& o, const Family& a);

class Filter {
 public:
  static Filter principal(const GroundSet& g, Subset kernel);
  static Filter point(const GroundSet& g, int x) { return principal(g, Subset::singleton(x)); }
  static Filter degenerate(const GroundSet& g) { return principal(g, Subset{}); }

  const GroundSet& ground() const { return ground_; }
  Subset kernel() const { return kernel_; }
  bool is_degenerate() const { return kernel_.empty(); }
  bool contains(Subset s) const { return kernel_.subset_of(s); }
  Family family() const { return Family::principal(ground_, kernel_); }

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.kernel_ == b.kernel_ && a.ground_ == b.ground_;
  }

 private:
  Filter(GroundSet g, Subset k) : ground_(std::move(g)), kernel_(k) {}

  GroundSet ground_;
  Subset kernel_;
};

bool mesh(const Filter& f, const Filter& g);
/// F ≥ G: F is finer, i.e. contains every member of G.
bool finer(const Filter& f, const Filter& g);
Filter meet(const Filter& f, const Filter& g);
Filter join(const Filter& f, const Filter& g);
bool filter_equiv(const Filter& f, const Filter& g);

/// Relation X ⇉ Y stored row-wise: rows[x] = {y : (x, y) ∈ R}.
class Relation {
 public:
  Relation(GroundSet dom, GroundSet cod, std::vector<Subset> rows);

  static Relation identity(const GroundSet& g);
  /// targets[x] = f(x).
  static Relation from_map(const GroundSet& dom, const GroundSet& cod, std::span<const int> targets);
  /// Graph given as a subset of dom × cod (see pair_index).
  static Relation from_graph(const GroundSet& dom, const GroundSet& cod, Subset graph);

  const GroundSet& domain() const { return dom_; }
  const GroundSet& codomain() const { return cod_; }
  Subset row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
  std::span<const Subset> rows() const { return rows_; }

  Subset image(Subset a) const;
  Subset preimage(Subset b) const;
  Relation inverse() const;
  Subset graph() const;

  /// Total and single-valued.
  bool is_map() const;
  bool is_surjective() const;
  /// f(x); requires is_map().
  int apply(int x) const { return row(x).first(); }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.rows_ == b.rows_;
  }

 private:
  GroundSet dom_;
  GroundSet cod_;
  std::vector<Subset> rows_;
};

/// RF: kernel R(ker F).
Filter image(const Relation& r, const Filter& f);
/// R⁻G: kernel R⁻(ker G).
Filter preimage(const Relation& r, const Filter& g);

/// The filter H on X×Y applied to F on X: HF = {HF : H ∈ H, F ∈ F}↑.
Filter image(const Filter& h, const GroundSet& x, const GroundSet& y, const Filter& f);
/// H⁻G for H on X×Y and G on Y.
Filter preimage(const Filter& h, const GroundSet& x, const GroundSet& y, const Filter& g);

/// F × G on the product ground.
Filter product_filter(const Filter& f, const Filter& g);

}  // namespace convkit
