#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsys {

/// Dense index of a lattice element. Every module above this one speaks
/// indices; labels exist only for display.
using Element = std::size_t;

/// Square boolean order matrix: `leq[x][y]` is x <= y.
using OrderMatrix = std::vector<std::vector<bool>>;

/// Coordinates (a, b) of an element of [1] x [n]. `a` is the row (0 bottom,
/// 1 top), `b` the column.
struct GridElement {
  int a = 0;
  int b = 0;

  static GridElement from_index(Element e, int n) {
    return {static_cast<int>(e) / (n + 1), static_cast<int>(e) % (n + 1)};
  }
  Element index(int n) const { return static_cast<Element>(a * (n + 1) + b); }

  friend auto operator<=>(const GridElement&, const GridElement&) = default;
};

struct SubLattice;
struct SubSemilattice;
class Lattice;

class LatticeError : public std::runtime_error {
 public:
  enum class Kind { NotAPartialOrder, NoMeet, NoJoin, EmptyComplement, Malformed };

  LatticeError(Kind kind, Element x, Element y, const std::string& what)
      : std::runtime_error(what), kind_(kind), x_(x), y_(y) {}

  Kind kind() const { return kind_; }
  Element x() const { return x_; }
  Element y() const { return y_; }

 private:
  Kind kind_;
  Element x_;
  Element y_;
};

/// A finite meet-semilattice with a bottom element. Immutable after
/// construction. The empty semilattice (size 0) is allowed so that a
/// complement x↑^c with x = bottom has somewhere to live.
class MeetSemilattice {
 public:
  /// Largest carrier for which the per-element bitmasks are populated.
  static constexpr std::size_t kMaskLimit = 64;

  MeetSemilattice() = default;
  MeetSemilattice(const MeetSemilattice&) = default;
  MeetSemilattice(MeetSemilattice&&) = default;
  MeetSemilattice& operator=(const MeetSemilattice&) = default;
  MeetSemilattice& operator=(MeetSemilattice&&) = default;
  virtual ~MeetSemilattice() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool leq(Element x, Element y) const { return leq_[x * size_ + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size_ + y]; }
  Element bottom() const { return bottom_; }

  /// The greatest element, if there is one.
  std::optional<Element> top() const { return top_; }

  /// Set when the carrier is (canonically indexed) [1] x [n].
  std::optional<int> grid_n() const { return grid_n_; }

  const std::string& label(Element x) const { return labels_[x]; }

  /// Bitmask of {y : x < y}. Only valid when size() <= kMaskLimit.
  std::uint64_t strict_up_mask(Element x) const { return strict_up_[x]; }
  /// Bitmask of {z : z <= y}. Only valid when size() <= kMaskLimit.
  std::uint64_t down_mask(Element y) const { return down_[y]; }

  /// Restrict to the elements in `keep` (given in increasing parent order).
  /// The caller guarantees the subset is closed under meets.
  MeetSemilattice induced(const std::vector<Element>& keep) const;

 protected:
  void finish();  // computes top, masks, default labels

  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  std::optional<Element> top_;
  std::optional<int> grid_n_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> strict_up_;
  std::vector<std::uint64_t> down_;

  friend class Lattice;
  friend SubLattice up_set(const Lattice&, Element);
  friend SubSemilattice up_set_complement(const Lattice&, Element);
};

/// A finite lattice: a meet-semilattice that also has joins and a top.
class Lattice : public MeetSemilattice {
 public:
  Lattice() = default;

  Element join(Element x, Element y) const { return join_[x * size_ + y]; }
  Element top_element() const { return *top_; }

  /// Checks partial-order axioms, then existence of all meets, then all
  /// joins, reporting the first failing pair. Throws LatticeError.
  static Lattice validate(const OrderMatrix& leq);

  /// Same as validate but keeps the supplied labels.
  static Lattice validate(const OrderMatrix& leq, std::vector<std::string> labels);

  Lattice induced_lattice(const std::vector<Element>& keep) const;

 private:
  std::vector<Element> join_;

  friend Lattice product(const Lattice&, const Lattice&);
  friend Lattice make_chain(int);
  friend SubLattice up_set(const Lattice&, Element);
};

/// The chain [n] = {0 < 1 < ... < n}.
Lattice make_chain(int n);

/// Componentwise product; element (i, j) gets index i * |l2| + j.
Lattice product(const Lattice& l1, const Lattice& l2);

/// [1] x [n], tagged as a grid.
Lattice make_grid(int n);

struct SubLattice {
  std::shared_ptr<const Lattice> lattice;
  std::vector<Element> embedding;  // sub index -> parent index
};

struct SubSemilattice {
  std::shared_ptr<const MeetSemilattice> semilattice;
  std::vector<Element> embedding;
};

/// x↑ = {y : y >= x}, a sublattice with bottom x.
SubLattice up_set(const Lattice& l, Element x);

/// x↑^c = {y : not y >= x}. Throws LatticeError(EmptyComplement) for x = bottom.
SubSemilattice up_set_complement(const Lattice& l, Element x);

/// An order-reversing bijection of a carrier.
struct DualityMap {
  std::vector<Element> perm;

  Element operator()(Element x) const { return perm[x]; }
};

/// (a, b) -> (1 - a, n - b) on [1] x [n].
DualityMap grid_duality(int n);

bool is_order_reversing(const MeetSemilattice& l, const DualityMap& d);

/// Text format: `n=<size>` then one `i<j` line per covering pair.
Lattice read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const Lattice& l);

}  // namespace tsys
