#include "ctc/blocks.hpp"

#include <algorithm>
#include <map>

#include "ctc/errors.hpp"

namespace ctc {

// ---- ModularReduction ---------------------------------------------------------

namespace {

std::size_t strip_prime(std::size_t e, unsigned p) {
  while (e % p == 0) e /= p;
  return e;
}

unsigned field_degree_for(unsigned p, std::size_t exponent) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
  if (exponent == 0) throw InputError("exponent must be positive");
  return static_cast<unsigned>(multiplicative_order(p, strip_prime(exponent, p)));
}

}  // namespace

ModularReduction::ModularReduction(unsigned p, std::size_t exponent)
    : p_(p), exponent_(exponent), field_(p, field_degree_for(p, exponent)) {
  std::size_t ep = strip_prime(exponent, p);
  GaloisField::Elem theta = field_.pow(field_.generator(), (field_.size() - 1) / ep);
  powers_.resize(exponent);
  GaloisField::Elem cur = field_.one();
  for (std::size_t j = 0; j < exponent; ++j) {
    powers_[j] = cur;
    cur = field_.mul(cur, theta);
  }
}

GaloisField::Elem ModularReduction::reduce(const Cyclo& x) const {
  std::size_t c = x.conductor();
  if (exponent_ % c != 0)
    throw InputError("conductor " + std::to_string(c) + " does not divide " + std::to_string(exponent_));
  if (!x.is_integral()) throw InternalError("reduction of a non-integral value " + x.to_string());
  std::size_t step = exponent_ / c;
  mpz_class pz(p_);
  GaloisField::Elem acc = field_.zero();
  const auto& co = x.coefficients();
  for (std::size_t j = 0; j < co.size(); ++j) {
    if (co[j] == 0) continue;
    mpz_class r = co[j].get_num() % pz;
    if (r < 0) r += pz;
    if (r == 0) continue;
    acc = field_.add(acc, field_.scale(powers_[(step * j) % exponent_], static_cast<unsigned>(r.get_ui())));
  }
  return acc;
}

nlohmann::ordered_json ModularReduction::describe() const {
  nlohmann::ordered_json j;
  j["prime"] = p_;
  j["exponent"] = exponent_;
  j["field_degree"] = field_.degree();
  j["modulus"] = field_.modulus();
  j["theta"] = field_.to_string(theta());
  return j;
}

// ---- central characters and blocks ------------------------------------------

std::vector<Cyclo> central_character(const CharTable& t, std::size_t chi) {
  const auto& cls = t.group().classes();
  mpq_class deg(static_cast<unsigned long>(t.degree(chi)));
  std::vector<Cyclo> out;
  out.reserve(cls.size());
  for (std::size_t k = 0; k < cls.size(); ++k) {
    mpq_class scale(static_cast<unsigned long>(cls[k].size));
    scale /= deg;
    out.push_back(t.value(chi, k) * scale);
  }
  return out;
}

namespace {

ReducedCentralChar reduce_central(const CharTable& t, std::size_t chi, const ModularReduction& red) {
  ReducedCentralChar r;
  r.p = red.prime();
  r.field_degree = red.field().degree();
  for (const auto& w : central_character(t, chi)) r.values.push_back(red.reduce(w));
  return r;
}

bool p_regular(const Perm& g, unsigned p) { return g.order() % p != 0; }

}  // namespace

BlockSystemPtr BlockSystem::compute(CharTablePtr table, unsigned p,
                                    std::shared_ptr<const ModularReduction> red) {
  if (!red) red = std::make_shared<const ModularReduction>(p, table->group().exponent());
  if (red->prime() != p) throw InputError("reduction prime differs from block prime");
  if (red->exponent() % table->exponent() != 0)
    throw InputError("reduction exponent is not a multiple of the table exponent");

  std::shared_ptr<BlockSystem> bs(new BlockSystem());
  bs->table_ = table;
  bs->p_ = p;
  bs->reduction_ = red;
  const CharTable& t = *table;
  const Group& g = t.group();
  std::size_t n = t.size();

  bs->char_defect_.resize(n);
  std::vector<ReducedCentralChar> lam(n);
  for (std::size_t chi = 0; chi < n; ++chi) {
    bs->char_defect_[chi] = defect(t, chi, p);
    lam[chi] = reduce_central(t, chi, *red);
    if (lam[chi].values[0] != red->field().one())
      throw InternalError("central character is not 1 at the identity");
  }

  // Rows are visited in index order, so blocks come out ordered by smallest
  // member; row 0 is the trivial character, hence the principal block first.
  std::map<ReducedCentralChar, std::size_t> seen;
  bs->block_of_.assign(n, 0);
  for (std::size_t chi = 0; chi < n; ++chi) {
    auto [it, fresh] = seen.emplace(lam[chi], bs->blocks_.size());
    if (fresh) {
      Block b;
      b.index = bs->blocks_.size();
      b.lambda = lam[chi];
      b.principal = (chi == 0);
      bs->blocks_.push_back(std::move(b));
    }
    bs->blocks_[it->second].members.push_back(chi);
    bs->block_of_[chi] = it->second;
  }

  const auto& cls = g.classes();
  for (auto& b : bs->blocks_) {
    unsigned dmax = 0;
    for (auto chi : b.members) dmax = std::max(dmax, bs->char_defect_[chi]);
    b.defect = dmax;

    std::size_t best = Group::npos;
    std::uint64_t best_kp = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (!p_regular(cls[k].rep, p) || b.lambda.values[k] == 0) continue;
      std::uint64_t kp = p_part(cls[k].size, p);
      if (best == Group::npos || kp > best_kp) {
        best = k;
        best_kp = kp;
      }
    }
    if (best == Group::npos) throw InternalError("no defect class found for a block");
    b.defect_class = best;
    b.defect_group = sylow(centralizer(g, cls[best].rep), p);
    if (log_p(b.defect_group.order(), p) != b.defect)
      throw InternalError("defect group order disagrees with the maximal member defect");
  }
  return bs;
}

std::vector<HeightTag> BlockSystem::heights(std::size_t b) const {
  const Block& blk = block(b);
  std::vector<HeightTag> out;
  for (auto chi : blk.members) out.push_back({chi, blk.defect - char_defect_[chi]});
  return out;
}

std::vector<std::size_t> BlockSystem::height_zero(std::size_t b) const { return of_defect(b, block(b).defect); }

std::vector<std::size_t> BlockSystem::of_defect(std::size_t b, unsigned d) const {
  std::vector<std::size_t> out;
  for (auto chi : block(b).members)
    if (char_defect_[chi] == d) out.push_back(chi);
  return out;
}

std::optional<std::size_t> BlockSystem::find(const ReducedCentralChar& lambda) const {
  for (const auto& b : blocks_)
    if (b.lambda == lambda) return b.index;
  return std::nullopt;
}

nlohmann::ordered_json BlockSystem::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "ctc-blocks/1";
  j["group_order"] = group().order();
  j["reduction"] = reduction_->describe();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : blocks_) {
    nlohmann::ordered_json e;
    e["index"] = b.index;
    e["principal"] = b.principal;
    e["members"] = b.members;
    std::vector<std::uint64_t> degs;
    std::vector<unsigned> hts;
    for (auto chi : b.members) {
      degs.push_back(table_->degree(chi));
      hts.push_back(b.defect - char_defect_[chi]);
    }
    e["degrees"] = degs;
    e["defect"] = b.defect;
    nlohmann::ordered_json dg;
    dg["order"] = b.defect_group.order();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& x : b.defect_group.generators()) gens.push_back(x.to_cycles());
    dg["generators"] = gens;
    e["defect_group"] = dg;
    e["heights"] = hts;
    arr.push_back(std::move(e));
  }
  j["blocks"] = std::move(arr);
  return j;
}

// ---- Brauer induction ----------------------------------------------------------

std::optional<std::size_t> brauer_induce(const BlockSystem& sub, std::size_t b, const BlockSystem& ambient) {
  const Group& h = sub.group();
  const Group& g = ambient.group();
  if (sub.prime() != ambient.prime()) throw InputError("block systems use different primes");
  const ModularReduction& red = ambient.reduction();
  if (&sub.reduction() != &red &&
      (sub.reduction().exponent() != red.exponent() || sub.reduction().prime() != red.prime()))
    throw InputError("block systems use different reductions");
  if (h.degree() != g.degree()) throw InputError("subgroup acts on a different number of points");
  for (const auto& x : h.generators())
    if (!g.contains(x)) throw InputError("H is not contained in G");

  const GaloisField& f = red.field();
  const auto& lam = sub.block(b).lambda.values;
  ReducedCentralChar induced;
  induced.p = red.prime();
  induced.field_degree = f.degree();
  induced.values.assign(g.classes().size(), f.zero());
  const auto& hcls = h.classes();
  for (std::size_t l = 0; l < hcls.size(); ++l) {
    std::size_t k = g.class_of(hcls[l].rep);
    induced.values[k] = f.add(induced.values[k], lam[l]);
  }
  return ambient.find(induced);
}

std::size_t conjugate_block(const BlockSystem& from, std::size_t b, const BlockSystem& to, const Perm& x) {
  const Group& h = from.group();
  const Group& hx = to.group();
  if (h.order() != hx.order()) throw InputError("block systems are not conjugate");
  Perm xi = x.inverse();
  const auto& lam = from.block(b).lambda.values;
  ReducedCentralChar moved = from.block(b).lambda;
  const auto& cls = hx.classes();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    std::size_t src = h.class_of(cls[k].rep.conjugate_by(xi));
    if (src == Group::npos) throw InputError("block systems are not conjugate by x");
    moved.values[k] = lam[src];
  }
  auto found = to.find(moved);
  if (!found) throw InternalError("conjugated central character matches no block");
  return *found;
}

std::size_t brauer_correspondent(const BlockSystem& ambient, std::size_t block,
                                 const BlockSystem& normalizer_blocks, const Subgroup& defect_group) {
  unsigned p = ambient.prime();
  unsigned d = log_p(defect_group.order(), p);
  if (d != ambient.block(block).defect) throw InputError("D is not a defect group of the block");
  const Group& n = normalizer_blocks.group();
  for (const auto& x : defect_group.generators())
    if (!n.contains(x)) throw InputError("D is not contained in the normalizer block system's group");
  std::optional<std::size_t> found;
  for (const auto& b : normalizer_blocks.blocks()) {
    if (b.defect != d) continue;
    auto up = brauer_induce(normalizer_blocks, b.index, ambient);
    if (!up || *up != block) continue;
    if (found) throw InternalError("Brauer correspondent is not unique");
    found = b.index;
  }
  if (!found) throw InternalError("no Brauer correspondent found");
  return *found;
}

// ---- LocalContext ------------------------------------------------------------

LocalContext::LocalContext(GroupPtr group, unsigned p, Limits limits)
    : group_(std::move(group)), p_(p), limits_(limits), cache_(std::make_shared<Cache>()) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
  reduction_ = std::make_shared<const ModularReduction>(p, group_->exponent());
  top_ = BlockSystem::compute(character_table(group_), p, reduction_);
  cache_->systems.emplace(group_->as_subgroup(), top_);
}

BlockSystemPtr LocalContext::blocks_of(const Subgroup& h) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->systems.find(h);
    if (it != cache_->systems.end()) return it->second;
  }
  for (const auto& x : h.generators())
    if (!group_->contains(x)) throw InputError("subgroup is not contained in the ambient group");
  auto grp = std::make_shared<const Group>(h, limits_);
  auto bs = BlockSystem::compute(character_table(grp), p_, reduction_);
  std::lock_guard lock(cache_->mu);
  return cache_->systems.emplace(h, bs).first->second;
}

LocalContext LocalContext::sub_context(const Subgroup& h) const {
  LocalContext sub;
  sub.top_ = blocks_of(h);
  sub.group_ = sub.top_->table().group_ptr();
  sub.p_ = p_;
  sub.limits_ = limits_;
  sub.reduction_ = reduction_;
  sub.cache_ = cache_;
  return sub;
}

std::pair<BlockSystemPtr, std::size_t> LocalContext::brauer_correspondent(std::size_t block) const {
  const Subgroup& d = top_->block(block).defect_group;
  auto nb = blocks_of(normalizer(*group_, d));
  return {nb, ctc::brauer_correspondent(*top_, block, *nb, d)};
}

nlohmann::ordered_json LocalContext::environment() const {
  nlohmann::ordered_json j;
  j["group_order"] = group_->order();
  j["degree"] = group_->degree();
  j["exponent"] = group_->exponent();
  j["reduction"] = reduction_->describe();
  j["lift_prime"] = top_->table().lift_prime();
  return j;
}

}  // namespace ctc
