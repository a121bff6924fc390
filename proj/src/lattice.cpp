#include "tsys/lattice.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tsys {

namespace {

std::string pair_text(Element x, Element y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// Greatest element of `candidates` under `leq`, if any.
std::optional<Element> greatest(const std::vector<Element>& candidates,
                                const std::vector<std::uint8_t>& leq, std::size_t size) {
  for (Element g : candidates) {
    bool ok = true;
    for (Element c : candidates) {
      if (!leq[c * size + g]) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

bool is_index_chain(const MeetSemilattice& l) {
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(x, y) != (x <= y)) return false;
  return true;
}

}  // namespace

void MeetSemilattice::finish() {
  top_.reset();
  for (Element t = 0; t < size_; ++t) {
    bool is_top = true;
    for (Element x = 0; x < size_ && is_top; ++x) is_top = leq(x, t);
    if (is_top) {
      top_ = t;
      break;
    }
  }
  strict_up_.clear();
  down_.clear();
  if (size_ <= kMaskLimit) {
    strict_up_.assign(size_, 0);
    down_.assign(size_, 0);
    for (Element x = 0; x < size_; ++x)
      for (Element y = 0; y < size_; ++y) {
        if (less(x, y)) strict_up_[x] |= std::uint64_t{1} << y;
        if (leq(x, y)) down_[y] |= std::uint64_t{1} << x;
      }
  }
  if (labels_.size() != size_) {
    labels_.clear();
    for (Element x = 0; x < size_; ++x) labels_.push_back(std::to_string(x));
  }
}

MeetSemilattice MeetSemilattice::induced(const std::vector<Element>& keep) const {
  std::vector<Element> position(size_, size_);
  for (Element i = 0; i < keep.size(); ++i) position[keep[i]] = i;

  MeetSemilattice sub;
  sub.size_ = keep.size();
  sub.leq_.assign(sub.size_ * sub.size_, 0);
  sub.meet_.assign(sub.size_ * sub.size_, 0);
  for (Element i = 0; i < sub.size_; ++i) {
    sub.labels_.push_back(labels_[keep[i]]);
    for (Element j = 0; j < sub.size_; ++j) {
      sub.leq_[i * sub.size_ + j] = leq(keep[i], keep[j]);
      sub.meet_[i * sub.size_ + j] = position[meet(keep[i], keep[j])];
    }
  }
  // The least kept element is the meet of everything kept.
  if (!keep.empty()) {
    Element b = keep.front();
    for (Element k : keep) b = meet(b, k);
    sub.bottom_ = position[b];
  }
  sub.finish();
  return sub;
}

Lattice Lattice::induced_lattice(const std::vector<Element>& keep) const {
  std::vector<Element> position(size_, size_);
  for (Element i = 0; i < keep.size(); ++i) position[keep[i]] = i;

  Lattice sub;
  static_cast<MeetSemilattice&>(sub) = induced(keep);
  sub.join_.assign(sub.size_ * sub.size_, 0);
  for (Element i = 0; i < sub.size_; ++i)
    for (Element j = 0; j < sub.size_; ++j)
      sub.join_[i * sub.size_ + j] = position[join(keep[i], keep[j])];
  return sub;
}

Lattice Lattice::validate(const OrderMatrix& leq) { return validate(leq, {}); }

Lattice Lattice::validate(const OrderMatrix& matrix, std::vector<std::string> labels) {
  const std::size_t n = matrix.size();
  if (n == 0) throw LatticeError(LatticeError::Kind::Malformed, 0, 0, "empty order matrix");
  for (const auto& row : matrix)
    if (row.size() != n)
      throw LatticeError(LatticeError::Kind::Malformed, 0, 0, "order matrix is not square");

  auto fail_order = [](Element x, Element y, const char* why) {
    throw LatticeError(LatticeError::Kind::NotAPartialOrder, x, y,
                       std::string("not a partial order: ") + why + " at " + pair_text(x, y));
  };
  for (Element x = 0; x < n; ++x)
    if (!matrix[x][x]) fail_order(x, x, "reflexivity");
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (matrix[x][y] && matrix[y][x]) fail_order(x, y, "antisymmetry");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (matrix[x][y])
        for (Element z = 0; z < n; ++z)
          if (matrix[y][z] && !matrix[x][z]) fail_order(x, z, "transitivity");

  Lattice l;
  l.size_ = n;
  l.leq_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) l.leq_[x * n + y] = matrix[x][y];

  std::vector<std::uint8_t> geq(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) geq[x * n + y] = matrix[y][x];

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      std::vector<Element> lower;
      for (Element z = 0; z < n; ++z)
        if (matrix[z][x] && matrix[z][y]) lower.push_back(z);
      auto m = greatest(lower, l.leq_, n);
      if (!m)
        throw LatticeError(LatticeError::Kind::NoMeet, x, y, "no meet for " + pair_text(x, y));
      l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      std::vector<Element> upper;
      for (Element z = 0; z < n; ++z)
        if (matrix[x][z] && matrix[y][z]) upper.push_back(z);
      auto j = greatest(upper, geq, n);
      if (!j)
        throw LatticeError(LatticeError::Kind::NoJoin, x, y, "no join for " + pair_text(x, y));
      l.join_[x * n + y] = l.join_[y * n + x] = *j;
    }

  Element b = 0;
  for (Element x = 0; x < n; ++x) b = l.meet(b, x);
  l.bottom_ = b;
  if (labels.size() == n) l.labels_ = std::move(labels);
  l.finish();
  return l;
}

Lattice make_chain(int n) {
  if (n < 0) throw std::invalid_argument("make_chain: n must be nonnegative");
  Lattice l;
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  l.size_ = size;
  l.leq_.assign(size * size, 0);
  l.meet_.assign(size * size, 0);
  l.join_.assign(size * size, 0);
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y) {
      l.leq_[x * size + y] = x <= y;
      l.meet_[x * size + y] = std::min(x, y);
      l.join_[x * size + y] = std::max(x, y);
    }
  l.bottom_ = 0;
  l.finish();
  return l;
}

Lattice product(const Lattice& l1, const Lattice& l2) {
  const std::size_t s1 = l1.size(), s2 = l2.size(), size = s1 * s2;
  Lattice l;
  l.size_ = size;
  l.leq_.assign(size * size, 0);
  l.meet_.assign(size * size, 0);
  l.join_.assign(size * size, 0);
  for (Element x = 0; x < size; ++x) {
    const Element x1 = x / s2, x2 = x % s2;
    l.labels_.push_back("(" + l1.label(x1) + "," + l2.label(x2) + ")");
    for (Element y = 0; y < size; ++y) {
      const Element y1 = y / s2, y2 = y % s2;
      l.leq_[x * size + y] = l1.leq(x1, y1) && l2.leq(x2, y2);
      l.meet_[x * size + y] = l1.meet(x1, y1) * s2 + l2.meet(x2, y2);
      l.join_[x * size + y] = l1.join(x1, y1) * s2 + l2.join(x2, y2);
    }
  }
  l.bottom_ = l1.bottom() * s2 + l2.bottom();
  if (s1 == 2 && is_index_chain(l1) && is_index_chain(l2))
    l.grid_n_ = static_cast<int>(s2) - 1;
  l.finish();
  return l;
}

Lattice make_grid(int n) { return product(make_chain(1), make_chain(n)); }

SubLattice up_set(const Lattice& l, Element x) {
  std::vector<Element> keep;
  for (Element y = 0; y < l.size(); ++y)
    if (l.leq(x, y)) keep.push_back(y);
  auto sub = std::make_shared<Lattice>(l.induced_lattice(keep));
  if (auto n = l.grid_n()) {
    const GridElement g = GridElement::from_index(x, *n);
    if (g.a == 0) sub->grid_n_ = *n - g.b;
  }
  return {std::move(sub), std::move(keep)};
}

SubSemilattice up_set_complement(const Lattice& l, Element x) {
  if (x == l.bottom())
    throw LatticeError(LatticeError::Kind::EmptyComplement, x, x,
                       "complement of the up-set of the bottom element is empty");
  std::vector<Element> keep;
  for (Element y = 0; y < l.size(); ++y)
    if (!l.leq(x, y)) keep.push_back(y);
  auto sub = std::make_shared<MeetSemilattice>(l.induced(keep));
  if (auto n = l.grid_n()) {
    const GridElement g = GridElement::from_index(x, *n);
    if (g.a == 0) sub->grid_n_ = g.b - 1;
  }
  return {std::move(sub), std::move(keep)};
}

DualityMap grid_duality(int n) {
  if (n < 0) throw std::invalid_argument("grid_duality: n must be nonnegative");
  DualityMap d;
  const std::size_t size = 2 * (static_cast<std::size_t>(n) + 1);
  d.perm.resize(size);
  for (Element e = 0; e < size; ++e) {
    const GridElement g = GridElement::from_index(e, n);
    d.perm[e] = GridElement{1 - g.a, n - g.b}.index(n);
  }
  return d;
}

bool is_order_reversing(const MeetSemilattice& l, const DualityMap& d) {
  if (d.perm.size() != l.size()) return false;
  std::vector<bool> hit(l.size(), false);
  for (Element p : d.perm) {
    if (p >= l.size() || hit[p]) return false;
    hit[p] = true;
  }
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(x, y) != l.leq(d(y), d(x))) return false;
  return true;
}

Lattice read_lattice(std::istream& in) {
  auto malformed = [](const std::string& why) {
    return LatticeError(LatticeError::Kind::Malformed, 0, 0, "lattice text: " + why);
  };
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0) throw malformed("expected `n=<size>`");
  std::size_t size = 0;
  try {
    size = std::stoul(line.substr(2));
  } catch (const std::exception&) {
    throw malformed("bad size `" + line + "`");
  }
  if (size == 0) throw malformed("size must be positive");

  OrderMatrix leq(size, std::vector<bool>(size, false));
  for (Element x = 0; x < size; ++x) leq[x][x] = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto lt = line.find('<');
    if (lt == std::string::npos) throw malformed("expected `i<j`, got `" + line + "`");
    std::size_t i = 0, j = 0;
    try {
      i = std::stoul(line.substr(0, lt));
      j = std::stoul(line.substr(lt + 1));
    } catch (const std::exception&) {
      throw malformed("bad pair `" + line + "`");
    }
    if (i >= size || j >= size) throw malformed("element out of range in `" + line + "`");
    leq[i][j] = true;
  }
  // Reflexive-transitive closure of the covering pairs.
  for (Element k = 0; k < size; ++k)
    for (Element i = 0; i < size; ++i)
      if (leq[i][k])
        for (Element j = 0; j < size; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return Lattice::validate(leq);
}

void write_lattice(std::ostream& out, const Lattice& l) {
  out << "n=" << l.size() << '\n';
  for (Element i = 0; i < l.size(); ++i)
    for (Element j = 0; j < l.size(); ++j) {
      if (!l.less(i, j)) continue;
      bool covers = true;
      for (Element k = 0; k < l.size() && covers; ++k)
        if (l.less(i, k) && l.less(k, j)) covers = false;
      if (covers) out << i << '<' << j << '\n';
    }
}

}  // namespace tsys
