#include "monspec/limits.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace monspec {

namespace {

const std::vector<std::size_t>& transition(const InverseSystem& s, std::size_t i, std::size_t j) {
  auto it = s.transitions.find({i, j});
  if (it == s.transitions.end()) {
    throw InputError("missing transition " + std::to_string(j) + " -> " + std::to_string(i));
  }
  return it->second;
}

std::optional<std::size_t> maximum_stage(const InverseSystem& s) {
  for (std::size_t m = 0; m < s.stage_count(); ++m) {
    bool top = true;
    for (std::size_t i = 0; i < s.stage_count() && top; ++i) top = s.shape[i][m];
    if (top) return m;
  }
  return std::nullopt;
}

bool coherent(const InverseSystem& s, const std::vector<std::size_t>& choice, std::size_t upto) {
  for (std::size_t i = 0; i <= upto; ++i) {
    for (std::size_t j = 0; j <= upto; ++j) {
      if (i != j && s.shape[i][j] && transition(s, i, j)[choice[j]] != choice[i]) return false;
    }
  }
  return true;
}

void backtrack(const InverseSystem& s, std::vector<std::size_t>& choice, std::size_t stage,
               std::vector<CoherentFamily>& out) {
  if (stage == s.stage_count()) {
    out.push_back({choice});
    return;
  }
  for (std::size_t x = 0; x < s.stage_sizes[stage]; ++x) {
    choice[stage] = x;
    if (coherent(s, choice, stage)) backtrack(s, choice, stage + 1, out);
  }
}

}  // namespace

void validate_system(const InverseSystem& s) {
  const std::size_t k = s.stage_count();
  if (s.shape.size() != k) throw InputError("shape has the wrong number of rows");
  for (const auto& row : s.shape) {
    if (row.size() != k) throw InputError("shape is not square");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!s.shape[i][i]) throw InputError("shape is not reflexive at stage " + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && s.shape[i][j] && s.shape[j][i]) throw InputError("shape is not antisymmetric");
      for (std::size_t l = 0; l < k; ++l) {
        if (s.shape[i][j] && s.shape[j][l] && !s.shape[i][l]) throw InputError("shape is not transitive");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!s.shape[i][j]) continue;
      const auto& t = transition(s, i, j);
      if (t.size() != s.stage_sizes[j]) throw InputError("transition has the wrong domain size");
      for (std::size_t x = 0; x < t.size(); ++x) {
        if (t[x] >= s.stage_sizes[i]) throw InputError("transition leaves its codomain");
        if (i == j && t[x] != x) throw InputError("transition at a stage is not the identity");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!(s.shape[i][j] && s.shape[j][l])) continue;
        const auto& tij = transition(s, i, j);
        const auto& tjl = transition(s, j, l);
        const auto& til = transition(s, i, l);
        for (std::size_t x = 0; x < s.stage_sizes[l]; ++x) {
          if (tij[tjl[x]] != til[x]) {
            throw InputError("transitions fail functoriality at stages " + std::to_string(i) + " <= " +
                             std::to_string(j) + " <= " + std::to_string(l));
          }
        }
      }
    }
  }
}

std::vector<CoherentFamily> inverse_limit(const InverseSystem& s) {
  validate_system(s);
  std::vector<CoherentFamily> out;
  if (s.stage_count() == 0) {
    out.push_back({});
    return out;
  }
  if (auto top = maximum_stage(s)) {
    // Every family is determined by its value at the maximum.
    for (std::size_t x = 0; x < s.stage_sizes[*top]; ++x) {
      std::vector<std::size_t> choice(s.stage_count());
      for (std::size_t i = 0; i < s.stage_count(); ++i) choice[i] = transition(s, i, *top)[x];
      if (coherent(s, choice, s.stage_count() - 1)) out.push_back({std::move(choice)});
    }
  } else {
    std::vector<std::size_t> choice(s.stage_count(), 0);
    backtrack(s, choice, 0, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubmonoidChainColimit colimit_of_submonoid_chain(const FiniteMonoid& ambient,
                                                 const std::vector<ElementSet>& chain) {
  if (chain.empty()) throw InputError("chain has no stages");
  ElementSet all(ambient.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_submonoid(ambient, chain[i])) {
      throw InputError("stage " + std::to_string(i) + " is not a submonoid");
    }
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i])) {
      throw InputError("chain is not increasing at stage " + std::to_string(i));
    }
    all |= chain[i];
  }
  SubmonoidChainColimit out;
  out.colimit = restrict_to(ambient, all).first;
  const auto members = all.members();
  for (const auto& stage : chain) {
    auto [sub, incl] = restrict_to(ambient, stage);
    std::vector<Elem> img;
    for (Elem x : incl.images) {
      img.push_back(static_cast<Elem>(std::lower_bound(members.begin(), members.end(), x) - members.begin()));
    }
    out.stages.emplace_back(sub, MonoidMap{sub, out.colimit, std::move(img)});
  }
  return out;
}

ZgReport zg_report(const FiniteMonoid& ambient, const std::vector<ElementSet>& chain) {
  const auto colim = colimit_of_submonoid_chain(ambient, chain);
  const auto spec_colim = primes_bruteforce(colim.colimit);
  const std::size_t k = chain.size();
  std::vector<Spectrum> stage_specs;
  for (const auto& [m, incl] : colim.stages) stage_specs.push_back(primes_bruteforce(m));

  InverseSystem sys;
  sys.shape.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    sys.stage_sizes.push_back(stage_specs[i].size());
    for (std::size_t j = i; j < k; ++j) {
      sys.shape[i][j] = true;
      // Inclusion M_i -> M_j, read off through the colimit.
      const auto& into_i = colim.stages[i].second.images;
      const auto& into_j = colim.stages[j].second.images;
      std::vector<Elem> img;
      for (Elem x : into_i) {
        img.push_back(static_cast<Elem>(std::find(into_j.begin(), into_j.end(), x) - into_j.begin()));
      }
      const MonoidMap incl{colim.stages[i].first, colim.stages[j].first, std::move(img)};
      sys.transitions[{i, j}] = induced_spec_map(incl, stage_specs[j], stage_specs[i]);
    }
  }
  const auto families = inverse_limit(sys);

  ZgReport report;
  report.spec_points = spec_colim.size();
  report.limit_families = families.size();
  std::vector<bool> hit(families.size(), false);
  bool ok = families.size() == spec_colim.size();
  std::vector<std::vector<std::size_t>> restrict(k);
  for (std::size_t j = 0; j < k; ++j) {
    restrict[j] = induced_spec_map(colim.stages[j].second, spec_colim, stage_specs[j]);
  }
  for (std::size_t p = 0; p < spec_colim.size() && ok; ++p) {
    CoherentFamily fam;
    for (std::size_t j = 0; j < k; ++j) fam.choice.push_back(restrict[j][p]);
    auto it = std::lower_bound(families.begin(), families.end(), fam);
    if (it == families.end() || !(*it == fam)) {
      ok = false;
      break;
    }
    const auto idx = static_cast<std::size_t>(it - families.begin());
    if (hit[idx]) ok = false;
    hit[idx] = true;
  }
  report.bijective = ok;
  return report;
}

bool zg_check(const FiniteMonoid& ambient, const std::vector<ElementSet>& chain) {
  return zg_report(ambient, chain).bijective;
}

ElementSet generated_subsemilattice(const JoinSemilattice& l, const ElementSet& gens) {
  ElementSet out(l.size());
  out.insert(JoinSemilattice::least());
  std::vector<Elem> frontier{JoinSemilattice::least()};
  const auto g = gens.members();
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem y : g) {
      const Elem z = l.join(x, y);
      if (!out.contains(z)) {
        out.insert(z);
        frontier.push_back(z);
      }
    }
  }
  return out;
}

std::vector<ElementSet> all_subsemilattices(const JoinSemilattice& l, std::size_t cap) {
  if (l.size() > std::min<std::size_t>(cap, 30)) {
    throw CapExceeded("cap exceeded: semilattice has " + std::to_string(l.size()) + " elements");
  }
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << (l.size() - 1);
  for (std::uint64_t s = 0; s < count; ++s) {
    ElementSet sub(l.size());
    sub.insert(JoinSemilattice::least());
    for (std::uint64_t bits = s << 1; bits != 0; bits &= bits - 1) {
      sub.insert(static_cast<Elem>(__builtin_ctzll(bits)));
    }
    if (l.is_subsemilattice(sub)) out.push_back(std::move(sub));
  }
  canonicalize(out);
  return out;
}

ProfiniteSpectrum profinite_spec(const JoinSemilattice& l, const std::vector<ElementSet>& subs) {
  ProfiniteSpectrum out;
  out.stages = subs;
  const std::size_t k = subs.size();
  ElementSet cover(l.size());
  std::vector<JoinSemilattice> stage_sl;
  std::vector<std::vector<Elem>> members;
  for (std::size_t i = 0; i < k; ++i) {
    if (!l.is_subsemilattice(subs[i])) {
      throw InputError("stage " + std::to_string(i) + " is not a subsemilattice");
    }
    cover |= subs[i];
    stage_sl.push_back(JoinSemilattice::from_monoid(restrict_to(l.monoid(), subs[i]).first));
    members.push_back(subs[i].members());
  }
  if (!(cover == ElementSet::full(l.size()))) throw InputError("stages do not cover the semilattice");

  auto& sys = out.system;
  sys.shape.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    sys.stage_sizes.push_back(subs[i].count());
    for (std::size_t j = 0; j < k; ++j) {
      if (!subs[i].is_subset_of(subs[j])) continue;
      sys.shape[i][j] = true;
      std::vector<Elem> img;
      for (Elem x : members[i]) {
        img.push_back(static_cast<Elem>(std::lower_bound(members[j].begin(), members[j].end(), x) -
                                        members[j].begin()));
      }
      const MonotoneMap incl{stage_sl[i], stage_sl[j], std::move(img)};
      const auto upper = right_adjoint(incl, true);
      sys.transitions[{i, j}] = std::vector<std::size_t>(upper.images.begin(), upper.images.end());
    }
  }
  out.families = inverse_limit(sys);

  const auto spec = spec_alpha(l);
  std::vector<bool> hit(spec.size(), false);
  bool ok = out.families.size() == spec.size();
  for (const auto& fam : out.families) {
    ElementSet prime(l.size());
    for (std::size_t i = 0; i < k; ++i) {
      alpha(stage_sl[i], static_cast<Elem>(fam.choice[i])).for_each([&](Elem local) {
        prime.insert(members[i][local]);
      });
    }
    const auto idx = spec.find(prime);
    if (idx == static_cast<std::size_t>(-1) || hit[idx]) {
      ok = false;
    } else {
      hit[idx] = true;
    }
    out.primes.push_back(std::move(prime));
  }
  out.bijective = ok;
  return out;
}

}  // namespace monspec
