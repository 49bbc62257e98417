#include "pftop/picture_fuzzy_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "pftop/error.hpp"

namespace pftop {

Grade refusal(const MembershipTriple& t) noexcept {
  // Valid triples keep the residual inside [0, 1].
  return Grade::from_raw(Grade::kScale - t.mu.raw() - t.rho.raw() - t.sigma.raw());
}

Universe::Universe(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidUniverse, "universe must have at least one element");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidUniverse, "duplicate universe element '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const noexcept {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

bool operator==(const Universe& a, const Universe& b) noexcept {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

std::string_view to_string(InclusionMode mode) noexcept {
  return mode == InclusionMode::Literal ? "literal" : "reversed";
}

PictureFuzzySet::PictureFuzzySet(Universe universe, std::vector<MembershipTriple> triples)
    : universe_(std::move(universe)), triples_(std::move(triples)) {
  if (triples_.size() != universe_.size()) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(universe_.size()) + " triples, got " +
                                               std::to_string(triples_.size()));
  }
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const auto& t = triples_[i];
    if (!is_valid(t)) {
      throw Error(ErrorKind::GradeSumExceeded, "mu + rho + sigma exceeds 1 at element '" + universe_.label(i) +
                                                   "' (" + to_decimal(t.mu) + " + " + to_decimal(t.rho) + " + " +
                                                   to_decimal(t.sigma) + ")");
    }
  }
}

PictureFuzzySet::PictureFuzzySet(Trusted, Universe universe, std::vector<MembershipTriple> triples) noexcept
    : universe_(std::move(universe)), triples_(std::move(triples)) {}

PictureFuzzySet PictureFuzzySet::full(const Universe& universe) {
  return PictureFuzzySet(Trusted{}, universe,
                         std::vector<MembershipTriple>(universe.size(), {Grade::one(), Grade::zero(), Grade::zero()}));
}

PictureFuzzySet PictureFuzzySet::null(const Universe& universe) {
  return PictureFuzzySet(Trusted{}, universe,
                         std::vector<MembershipTriple>(universe.size(), {Grade::zero(), Grade::zero(), Grade::one()}));
}

const MembershipTriple& PictureFuzzySet::at(std::string_view label) const {
  const auto index = universe_.index_of(label);
  if (!index) {
    throw Error(ErrorKind::UnknownElement, "'" + std::string(label) + "' is not an element of the universe");
  }
  return triples_[*index];
}

Grade PictureFuzzySet::refusal(std::string_view label) const { return pftop::refusal(at(label)); }

bool PictureFuzzySet::is_full() const noexcept {
  return std::all_of(triples_.begin(), triples_.end(), [](const MembershipTriple& t) {
    return t == MembershipTriple{Grade::one(), Grade::zero(), Grade::zero()};
  });
}

bool PictureFuzzySet::is_null() const noexcept {
  return std::all_of(triples_.begin(), triples_.end(), [](const MembershipTriple& t) {
    return t == MembershipTriple{Grade::zero(), Grade::zero(), Grade::one()};
  });
}

bool operator==(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept {
  return a.triples_ == b.triples_ && a.universe_ == b.universe_;
}

void require_same_universe(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "operands are defined over different universes");
  }
}

PictureFuzzySet unite(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  require_same_universe(a, b);
  std::vector<MembershipTriple> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {std::max(a[i].mu, b[i].mu), std::min(a[i].rho, b[i].rho), std::min(a[i].sigma, b[i].sigma)};
  }
  return PictureFuzzySet(PictureFuzzySet::Trusted{}, a.universe(), std::move(out));
}

PictureFuzzySet intersect(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  require_same_universe(a, b);
  std::vector<MembershipTriple> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {std::min(a[i].mu, b[i].mu), std::min(a[i].rho, b[i].rho), std::max(a[i].sigma, b[i].sigma)};
  }
  return PictureFuzzySet(PictureFuzzySet::Trusted{}, a.universe(), std::move(out));
}

PictureFuzzySet complement(const PictureFuzzySet& a) {
  std::vector<MembershipTriple> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = {a[i].sigma, a[i].rho, a[i].mu};
  }
  return PictureFuzzySet(PictureFuzzySet::Trusted{}, a.universe(), std::move(out));
}

namespace {

template <typename Op>
PictureFuzzySet fold(std::span<const PictureFuzzySet> sets, Op op) {
  if (sets.empty()) {
    throw Error(ErrorKind::EmptyFamily, "cannot combine an empty family");
  }
  PictureFuzzySet acc = sets.front();
  for (const auto& s : sets.subspan(1)) acc = op(acc, s);
  return acc;
}

}  // namespace

PictureFuzzySet unite_all(std::span<const PictureFuzzySet> sets) { return fold(sets, unite); }

PictureFuzzySet intersect_all(std::span<const PictureFuzzySet> sets) { return fold(sets, intersect); }

bool includes(const PictureFuzzySet& a, const PictureFuzzySet& b, InclusionMode mode) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool rho_ok = mode == InclusionMode::Literal ? a[i].rho <= b[i].rho : a[i].rho >= b[i].rho;
    if (!(a[i].mu <= b[i].mu && rho_ok && a[i].sigma >= b[i].sigma)) return false;
  }
  return true;
}

bool equals(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  require_same_universe(a, b);
  return std::equal(a.triples().begin(), a.triples().end(), b.triples().begin());
}

std::strong_ordering compare_values(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept {
  return std::lexicographical_compare_three_way(a.triples().begin(), a.triples().end(), b.triples().begin(),
                                                b.triples().end());
}

bool canonical_less(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept {
  const auto rank = [](const PictureFuzzySet& s) { return s.is_full() ? 0 : s.is_null() ? 1 : 2; };
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != rb) return ra < rb;
  return compare_values(a, b) < 0;
}

std::string to_string(const PictureFuzzySet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += "(" + set.universe().label(i) + ", " + to_decimal(set[i].mu) + ", " + to_decimal(set[i].rho) + ", " +
           to_decimal(set[i].sigma) + ")";
  }
  return out + "}";
}

}  // namespace pftop
