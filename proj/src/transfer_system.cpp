#include "tsys/transfer_system.hpp"

#include <bit>

namespace tsys {

namespace {

constexpr std::uint64_t bit(Element i) { return std::uint64_t{1} << i; }

// Calls f(i) for every set bit i of mask, lowest first.
template <class F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    f(static_cast<Element>(i));
  }
}

void check_size(const MeetSemilattice& carrier) {
  if (carrier.size() > MeetSemilattice::kMaskLimit)
    throw std::invalid_argument("transfer systems are limited to carriers of at most 64 elements");
}

// Worklist closure. Bits are set on insertion and each inserted pair is
// processed once, so every transitive composite and every restriction is
// generated by whichever of its sources is processed last.
class ClosureBuilder {
 public:
  ClosureBuilder(const MeetSemilattice& carrier, TransferSystem::Rows rows)
      : carrier_(carrier), succ_(std::move(rows)), pred_(carrier.size(), 0) {
    for (Element x = 0; x < succ_.size(); ++x)
      for_each_bit(succ_[x], [&](Element y) { pred_[y] |= bit(x); });
  }

  void add(Element x, Element y) {
    if (x == y || (succ_[x] & bit(y))) return;
    succ_[x] |= bit(y);
    pred_[y] |= bit(x);
    work_.emplace_back(x, y);
  }

  TransferSystem::Rows run() && {
    while (!work_.empty()) {
      const auto [x, y] = work_.back();
      work_.pop_back();
      for_each_bit(pred_[x], [&](Element w) { add(w, y); });
      for_each_bit(succ_[y], [&](Element z) { add(x, z); });
      for_each_bit(carrier_.down_mask(y), [&](Element z) { add(carrier_.meet(x, z), z); });
    }
    return std::move(succ_);
  }

 private:
  const MeetSemilattice& carrier_;
  TransferSystem::Rows succ_;
  TransferSystem::Rows pred_;
  std::vector<ElementPair> work_;
};

TransferSystem restrict_to(const TransferSystem& t, Carrier sub, const std::vector<Element>& embedding) {
  TransferSystem::Rows rows(embedding.size(), 0);
  for (Element i = 0; i < embedding.size(); ++i)
    for (Element j = 0; j < embedding.size(); ++j)
      if (i != j && t.related(embedding[i], embedding[j])) rows[i] |= bit(j);
  return TransferSystem::from_rows(std::move(sub), std::move(rows));
}

}  // namespace

TransferSystem::TransferSystem(Carrier carrier) : carrier_(std::move(carrier)) {
  check_size(*carrier_);
  rows_.assign(carrier_->size(), 0);
}

TransferSystem TransferSystem::from_rows(Carrier carrier, Rows rows) {
  check_size(*carrier);
  if (rows.size() != carrier->size())
    throw std::invalid_argument("row count does not match carrier size");
  return TransferSystem(std::move(carrier), std::move(rows));
}

TransferSystem TransferSystem::complete(Carrier carrier) {
  check_size(*carrier);
  Rows rows(carrier->size(), 0);
  for (Element x = 0; x < rows.size(); ++x) rows[x] = carrier->strict_up_mask(x);
  return TransferSystem(std::move(carrier), std::move(rows));
}

std::vector<ElementPair> TransferSystem::pairs() const {
  std::vector<ElementPair> out;
  for (Element x = 0; x < rows_.size(); ++x)
    for_each_bit(rows_[x], [&](Element y) { out.emplace_back(x, y); });
  return out;
}

std::size_t TransferSystem::pair_count() const {
  std::size_t count = 0;
  for (auto r : rows_) count += static_cast<std::size_t>(std::popcount(r));
  return count;
}

std::size_t RowsHash::operator()(const TransferSystem::Rows& rows) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto r : rows) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Verdict::describe() const {
  auto s = [](Element e) { return std::to_string(e); };
  switch (violated) {
    case Axiom::None:
      return "transfer system";
    case Axiom::Refinement:
      return "refinement: " + s(x) + " R " + s(y) + " but not " + s(x) + " <= " + s(y);
    case Axiom::Transitivity:
      return "transitivity: " + s(x) + " R " + s(y) + " R " + s(z) + " but not " + s(x) + " R " + s(z);
    case Axiom::Restriction:
      return "restriction: " + s(x) + " R " + s(y) + ", " + s(z) + " <= " + s(y) +
             " but the restricted pair into " + s(z) + " is missing";
  }
  return {};
}

Verdict is_transfer_system(const MeetSemilattice& carrier, std::span<const std::uint64_t> rows) {
  check_size(carrier);
  if (rows.size() != carrier.size())
    throw std::invalid_argument("row count does not match carrier size");
  Verdict v;
  for (Element x = 0; x < rows.size(); ++x) {
    const std::uint64_t bad = rows[x] & ~carrier.strict_up_mask(x);
    if (bad) return {Verdict::Axiom::Refinement, x, static_cast<Element>(std::countr_zero(bad)), 0};
  }
  for (Element x = 0; x < rows.size(); ++x) {
    std::uint64_t ys = rows[x];
    while (ys) {
      const Element y = static_cast<Element>(std::countr_zero(ys));
      ys &= ys - 1;
      const std::uint64_t missing = rows[y] & ~rows[x] & ~bit(x);
      if (missing)
        return {Verdict::Axiom::Transitivity, x, y, static_cast<Element>(std::countr_zero(missing))};
    }
  }
  for (Element x = 0; x < rows.size(); ++x) {
    std::uint64_t ys = rows[x];
    while (ys) {
      const Element y = static_cast<Element>(std::countr_zero(ys));
      ys &= ys - 1;
      std::uint64_t zs = carrier.down_mask(y);
      while (zs) {
        const Element z = static_cast<Element>(std::countr_zero(zs));
        zs &= zs - 1;
        const Element w = carrier.meet(x, z);
        if (w != z && !(rows[w] & bit(z))) return {Verdict::Axiom::Restriction, x, y, z};
      }
    }
  }
  return v;
}

TransferSystem closure(Carrier carrier, std::span<const ElementPair> seed) {
  check_size(*carrier);
  ClosureBuilder builder(*carrier, TransferSystem::Rows(carrier->size(), 0));
  for (const auto& [x, y] : seed) {
    if (x >= carrier->size() || y >= carrier->size() || !carrier->leq(x, y))
      throw std::invalid_argument("closure: seed pair (" + std::to_string(x) + ", " +
                                  std::to_string(y) + ") is not comparable");
    builder.add(x, y);
  }
  auto rows = std::move(builder).run();
  return TransferSystem::from_rows(std::move(carrier), std::move(rows));
}

TransferSystem extend(const TransferSystem& t, Element x, Element y) {
  if (!t.carrier().leq(x, y)) throw std::invalid_argument("extend: pair is not comparable");
  ClosureBuilder builder(t.carrier(), t.rows());
  builder.add(x, y);
  auto rows = std::move(builder).run();
  return TransferSystem::from_rows(t.carrier_ptr(), std::move(rows));
}

Element minimal_fibrant(const TransferSystem& t) {
  const auto top = t.carrier().top();
  if (!top) throw WrongCarrier("minimal_fibrant: carrier has no top element");
  Element result = *top;
  for (Element x = 0; x < t.rows().size(); ++x)
    if (t.rows()[x] & bit(*top)) result = t.carrier().meet(result, x);
  return result;
}

int require_grid(const TransferSystem& t) {
  const auto n = t.carrier().grid_n();
  if (!n) throw WrongCarrier("operation requires a [1] x [n] carrier");
  return *n;
}

bool is_liftable(const TransferSystem& t) {
  const int n = require_grid(t);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (t.related(GridElement{1, i}.index(n), GridElement{1, j}.index(n)) &&
          !t.related(GridElement{0, i}.index(n), GridElement{1, i}.index(n)))
        return false;
  return true;
}

bool is_saturated(const TransferSystem& t) {
  const auto& rows = t.rows();
  for (Element x = 0; x < rows.size(); ++x) {
    std::uint64_t zs = rows[x];
    while (zs) {
      const Element z = static_cast<Element>(std::countr_zero(zs));
      zs &= zs - 1;
      // y strictly between x and z, plus y = x which holds trivially.
      const std::uint64_t between = t.carrier().strict_up_mask(x) & t.carrier().down_mask(z) & ~bit(z);
      std::uint64_t ys = between;
      while (ys) {
        const Element y = static_cast<Element>(std::countr_zero(ys));
        ys &= ys - 1;
        if (!(rows[y] & bit(z))) return false;
      }
    }
  }
  return true;
}

bool has_full_right_vertical(const TransferSystem& t) {
  const int n = require_grid(t);
  return t.related(GridElement{0, n}.index(n), GridElement{1, n}.index(n));
}

bool is_stationary(const TransferSystem& t, int b) {
  const int n = require_grid(t);
  for (int c = 0; c <= b; ++c)
    for (int d = b + 1; d <= n; ++d)
      if (t.related(GridElement{1, c}.index(n), GridElement{1, d}.index(n))) return false;
  return true;
}

bool is_extendable(const TransferSystem& t, int b) {
  const int n = require_grid(t);
  return t.related(GridElement{0, b}.index(n), GridElement{0, n}.index(n));
}

Stats stats(const TransferSystem& t) {
  const int n = require_grid(t);
  Stats s;
  s.minimal_fibrant = GridElement::from_index(minimal_fibrant(t), n);
  for (int b = 0; b <= n; ++b) {
    if (is_stationary(t, b)) ++s.stationary;
    if (is_extendable(t, b)) ++s.extendable;
  }
  s.liftable = is_liftable(t);
  s.saturated = is_saturated(t);
  return s;
}

DownwardClosure downward_closure(const TransferSystem& t) {
  const auto& c = t.carrier();
  DownwardClosure e;
  e.rows.assign(c.size(), 0);
  for (Element y = 0; y < c.size(); ++y) {
    std::uint64_t below = 0;
    for (Element x = 0; x < c.size(); ++x)
      if (t.rows()[x] & bit(y)) below |= c.down_mask(x);
    for_each_bit(below, [&](Element z) { e.rows[z] |= bit(y); });
  }
  return e;
}

TransferSystem dual(const TransferSystem& t, const DualityMap& d) {
  const auto& c = t.carrier();
  if (!is_order_reversing(c, d)) throw std::invalid_argument("dual: map is not an order-reversing bijection");
  const DownwardClosure e = downward_closure(t);
  TransferSystem::Rows rows(c.size(), 0);
  for (Element u = 0; u < c.size(); ++u)
    for_each_bit(c.strict_up_mask(u), [&](Element v) {
      if (!e.contains(d(v), d(u))) rows[u] |= bit(v);
    });
  auto result = TransferSystem::from_rows(t.carrier_ptr(), std::move(rows));
  if (const Verdict v = is_transfer_system(result); !v)
    throw InternalInvariant("dual produced a relation that is not a transfer system: " + v.describe());
  return result;
}

Split split(const TransferSystem& t) {
  auto lattice = std::dynamic_pointer_cast<const Lattice>(t.carrier_ptr());
  if (!lattice) throw WrongCarrier("split: carrier must be a lattice");
  const Element pivot = minimal_fibrant(t);

  SubLattice upper_carrier = up_set(*lattice, pivot);
  SubSemilattice lower_carrier;
  if (pivot == lattice->bottom()) {
    lower_carrier.semilattice = std::make_shared<MeetSemilattice>();
  } else {
    lower_carrier = up_set_complement(*lattice, pivot);
  }
  TransferSystem upper = restrict_to(t, upper_carrier.lattice, upper_carrier.embedding);
  TransferSystem lower = restrict_to(t, lower_carrier.semilattice, lower_carrier.embedding);
  return Split{pivot, std::move(lower_carrier), std::move(upper_carrier), std::move(lower),
               std::move(upper)};
}

TransferSystem odot_compose(std::shared_ptr<const Lattice> lattice, Element pivot,
                            const TransferSystem& lower, const TransferSystem& upper) {
  const SubLattice up = up_set(*lattice, pivot);
  std::vector<Element> lower_embedding;
  if (pivot != lattice->bottom()) lower_embedding = up_set_complement(*lattice, pivot).embedding;

  if (upper.carrier().size() != up.embedding.size() || lower.carrier().size() != lower_embedding.size())
    throw ComposeError(ComposeError::Kind::CarrierMismatch, {},
                       "odot_compose: carriers do not match the pivot's up-set and its complement");
  if (minimal_fibrant(upper) != upper.carrier().bottom())
    throw ComposeError(ComposeError::Kind::WrongMinimalFibrant, {},
                       "odot_compose: upper system does not have the pivot as minimal fibrant element");

  TransferSystem::Rows rows(lattice->size(), 0);
  auto embed = [&](const TransferSystem& part, const std::vector<Element>& embedding) {
    for (const auto& [x, y] : part.pairs()) rows[embedding[x]] |= bit(embedding[y]);
  };
  embed(lower, lower_embedding);
  embed(upper, up.embedding);

  auto result = TransferSystem::from_rows(lattice, std::move(rows));
  if (const Verdict v = is_transfer_system(result); !v)
    throw ComposeError(ComposeError::Kind::NotRestrictionClosed, v,
                       "odot_compose: pair is not restriction closed (" + v.describe() + ")");
  return result;
}

nlohmann::json to_json(const TransferSystem& t) {
  nlohmann::json pairs = nlohmann::json::array();
  if (const auto n = t.carrier().grid_n()) {
    for (const auto& [x, y] : t.pairs()) {
      const auto gx = GridElement::from_index(x, *n), gy = GridElement::from_index(y, *n);
      pairs.push_back({gx.a, gx.b, gy.a, gy.b});
    }
    return {{"n", *n}, {"pairs", std::move(pairs)}};
  }
  for (const auto& [x, y] : t.pairs()) pairs.push_back({x, y});
  return {{"size", t.carrier().size()}, {"pairs", std::move(pairs)}};
}

TransferSystem grid_system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs") || !j["n"].is_number_integer())
    throw std::invalid_argument("expected {\"n\": <int>, \"pairs\": [...]}");
  const int n = j["n"].get<int>();
  if (n < 0 || 2 * (n + 1) > static_cast<int>(MeetSemilattice::kMaskLimit))
    throw std::invalid_argument("grid size out of range");
  auto carrier = std::make_shared<const Lattice>(make_grid(n));
  TransferSystem::Rows rows(carrier->size(), 0);
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 4) throw std::invalid_argument("each pair must be [a,b,c,d]");
    const GridElement from{p[0].get<int>(), p[1].get<int>()}, to{p[2].get<int>(), p[3].get<int>()};
    for (const auto& g : {from, to})
      if (g.a < 0 || g.a > 1 || g.b < 0 || g.b > n) throw std::invalid_argument("grid element out of range");
    const Element x = from.index(n), y = to.index(n);
    if (x == y || !carrier->leq(x, y)) throw std::invalid_argument("pair is not a strict comparable pair");
    rows[x] |= bit(y);
  }
  auto t = TransferSystem::from_rows(std::move(carrier), std::move(rows));
  if (const Verdict v = is_transfer_system(t); !v)
    throw std::invalid_argument("not a transfer system: " + v.describe());
  return t;
}

}  // namespace tsys
