#include "posetlab/kur.hpp"

#include <algorithm>
#include <climits>

#include "posetlab/dimension.hpp"

namespace posetlab {

namespace {

void consider_upper(int value, const std::string& rule, int& hi,
                    std::vector<std::string>& rules) {
  if (value < hi) {
    hi = value;
    rules = {rule};
  } else if (value == hi) {
    rules.push_back(rule);
  }
}

void consider_lower(int value, const std::string& rule, int& lo,
                    std::vector<std::string>& rules) {
  if (value > lo) {
    lo = value;
    rules = {rule};
  } else if (value == lo) {
    rules.push_back(rule);
  }
}

}  // namespace

BoundInterval kur_bounds(const Poset& p, Budget budget, const KurOptions& opts) {
  BoundInterval out;
  if (is_antichain(p)) {
    out.lo = out.hi = 0;
    out.lo_rules = out.hi_rules = {"antichain"};
    return out;
  }
  out.lo = 1;
  out.lo_rules = {"comparable-pair"};
  if (is_tree(p)) {
    out.hi = 1;
    out.hi_rules = {"tree"};
    return out;
  }

  int hi = INT_MAX;
  std::vector<std::string> hi_rules;

  Bits j = join_irreducibles(p);
  consider_upper(j.count(), "irreducible-count", hi, hi_rules);

  if (p.cube_tag()) {
    const int r = p.cube_tag()->r;
    const int m = p.cube_tag()->m;
    consider_lower(r + 1, "cube-breadth", out.lo, out.lo_rules);
    if (r >= 1 && r <= 3)
      consider_upper(r + 1, "hajnal-exact", hi, hi_rules);
    if (m == r + 2) consider_upper(r + 1, "pinch-exact", hi, hi_rules);
    if (opts.assume_gch && r + 1 < hi) {
      hi = r + 1;
      hi_rules = {"gch"};
      out.hi_conditional = true;
    }
  }

  if (!opts.factors.empty()) {
    if (opts.factors.size() < 2)
      throw FactorizationInvalid("a factorization needs at least two factors");
    long long total = 1;
    for (const auto& f : opts.factors) {
      if (!f.least())
        throw FactorizationInvalid("every factor must have a least element");
      total *= f.size();
      if (total > Poset::kHardCapacity)
        throw FactorizationInvalid("factor product exceeds the hard capacity");
    }
    if (total != p.size())
      throw FactorizationInvalid("factor sizes do not multiply to |P|");
    Poset prod = opts.factors[0];
    for (std::size_t i = 1; i < opts.factors.size(); ++i)
      prod = product(prod, opts.factors[i], Poset::kHardCapacity);
    EmbedResult iso = embeds(prod, p, budget);
    if (iso.status != SearchStatus::Found)
      throw FactorizationInvalid(
          "supplied factors are not isomorphic to P as a direct product");
    int sum = 0;
    for (const auto& f : opts.factors) {
      KurOptions sub_opts;
      sub_opts.assume_gch = opts.assume_gch;
      sum += kur_bounds(f, budget, sub_opts).hi;
    }
    consider_upper(sum, "product-sum", hi, hi_rules);
  }

  // The certificates above may already pinch the interval; neither search
  // below can move a pinched bound, so each runs only while lo < hi.

  // Principal-down-set breadth lower bound: applies when P has a zero and
  // every P-down-a is a join-semilattice (then each is a finite lattice and
  // its classical breadth is the maximal irredundant join-set size).
  if (out.lo < hi && p.least()) {
    bool applies = true;
    std::vector<Poset> downs;
    for (int a = 0; a < p.size() && applies; ++a) {
      Poset sub = subposet(p, p.down(a));
      if (!is_join_semilattice(sub))
        applies = false;
      else
        downs.push_back(std::move(sub));
    }
    if (applies) {
      int best = 0;
      for (const auto& sub : downs)
        best = std::max(best, breadth_join(sub, budget).value);
      consider_lower(best, "downset-breadth", out.lo, out.lo_rules);
    }
  }

  if (out.lo < hi) {
    DimResult d = dim_exact(p, budget);
    if (d.exact()) {
      consider_upper(d.value(), "dimension", hi, hi_rules);
    } else {
      consider_upper(d.upper, "dimension-upper", hi, hi_rules);
      consider_upper(dim_upper_width(p), "width-irreducibles", hi, hi_rules);
    }
  }

  out.hi = hi;
  out.hi_rules = std::move(hi_rules);
  if (out.lo > out.hi)
    throw InternalError("kur bound rules produced an empty interval");
  return out;
}

UpperBound kur_product_upper(const BoundInterval& a, const BoundInterval& b) {
  UpperBound u;
  u.value = a.hi + b.hi;
  u.rules = a.hi_rules;
  u.rules.insert(u.rules.end(), b.hi_rules.begin(), b.hi_rules.end());
  u.rules.push_back("product-sum");
  return u;
}

std::string AlephRelation::render_aleph() const {
  return "(aleph_" + std::to_string(offset) + ", " + std::to_string(order) +
         ", aleph_0) -> " + size.str();
}

std::string AlephRelation::render_lambda() const {
  return "(lambda^{+" + std::to_string(offset) + "}, " + std::to_string(order) +
         ", lambda) -> " + size.str();
}

AlephRelation relation_from_cube(std::uint64_t m, int order, int kur_hi,
                                 bool conditional, std::string rule) {
  if (kur_hi < 1) throw InvalidArgs("relation requires kur_hi >= 1");
  if (order < 1) throw InvalidArgs("relation requires a positive order");
  AlephRelation rel;
  rel.offset = std::uint64_t(kur_hi) - 1;
  rel.order = order;
  rel.size = Card::plain(BigInt(m));
  rel.conditional = conditional;
  rel.rule = std::move(rule);
  return rel;
}

}  // namespace posetlab
