#include "monact/projectivity.hpp"

#include <algorithm>

#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/error.hpp"
#include "monact/structure.hpp"

namespace monact {

std::vector<Elem> idempotents(const Monoid& monoid) {
  std::vector<Elem> out;
  for (Elem e = 0; e < monoid.size(); ++e) {
    if (monoid.is_idempotent(e)) {
      out.push_back(e);
    }
  }
  return out;
}

Act principal_act(const Monoid& monoid, Elem e, Category category) {
  if (e >= monoid.size() || !monoid.is_idempotent(e)) {
    throw Error(ErrorKind::NotIdempotent,
                (e < monoid.size() ? monoid.label(e) : std::to_string(e)) +
                    " is not an idempotent");
  }
  std::vector<bool> member(monoid.size(), false);
  for (Elem s = 0; s < monoid.size(); ++s) {
    member[monoid.mul(s, e)] = true;
  }
  std::vector<Elem> carrier;
  std::vector<Elem> index(monoid.size(), 0);
  std::vector<std::string> labels;
  for (Elem x = 0; x < monoid.size(); ++x) {
    if (member[x]) {
      index[x] = static_cast<Elem>(carrier.size());
      carrier.push_back(x);
      labels.push_back(monoid.label(x));
    }
  }
  std::vector<std::vector<Elem>> rows(monoid.size());
  for (Elem s = 0; s < monoid.size(); ++s) {
    for (Elem x : carrier) {
      rows[s].push_back(index[monoid.mul(s, x)]);
    }
  }
  return Act::validate(monoid, std::move(labels), std::move(rows), category);
}

std::optional<ProjectivityCertificate> is_projective(const Act& a,
                                                     Category category) {
  Decomposition dec = decompose(a, category);
  Monoid const& monoid = a.monoid();
  std::vector<std::pair<Elem, Act>> principals;
  for (Elem e : idempotents(monoid)) {
    principals.emplace_back(e, principal_act(monoid, e, category));
  }
  ProjectivityCertificate cert{category, {}};
  for (auto const& comp : dec.components) {
    Act piece = comp.as_act();
    bool matched = false;
    for (auto const& [e, se] : principals) {
      if (auto iso = is_isomorphic(se, piece)) {
        cert.summands.push_back({comp, e, *iso});
        matched = true;
        break;
      }
    }
    if (!matched) {
      return std::nullopt;
    }
  }
  return cert;
}

namespace {

std::optional<Cover> cover_against(const ActHom& f,
                                   const std::vector<Subact>& maximal) {
  if (!f.is_surjective()) {
    return std::nullopt;
  }
  Cover cover{f, f.category(), {}};
  for (auto const& m : maximal) {
    ElemSet img = f.image(m.mask());
    auto missing = std::find(img.begin(), img.end(), false);
    if (missing == img.end()) {
      return std::nullopt;
    }
    cover.evidence.push_back({m, static_cast<Elem>(missing - img.begin())});
  }
  return cover;
}

}  // namespace

std::optional<Cover> is_cover(const ActHom& f) {
  if (!f.is_surjective()) {
    return std::nullopt;
  }
  return cover_against(f, maximal_proper_subacts(f.source()));
}

std::size_t default_cover_bound(const Act& a) {
  return a.size() + a.monoid().size();
}

std::size_t sufficient_cover_bound(const Act& a, Category category) {
  std::size_t const s = a.monoid().size();
  if (category == Category::Act0) {
    return a.size() <= 1 ? 1 : (a.size() - 1) * (s - 1) + 1;
  }
  return a.size() * s;
}

void for_each_projective_cover(
    const Act& a, Category category, std::size_t size_bound,
    const std::function<bool(const ProjectiveCover&)>& visit) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptyAct, "projective cover of the empty act");
  }
  Act target = a.in_category(category);
  Monoid const& monoid = a.monoid();
  struct Candidate {
    Elem e;
    Act se;
  };
  std::vector<Candidate> pool;
  for (Elem e : idempotents(monoid)) {
    pool.push_back({e, principal_act(monoid, e, category)});
  }
  // A cover uses at most one summand per nonzero generator of A.
  std::size_t const max_summands =
      category == Category::ActO ? target.size()
                                 : std::max<std::size_t>(1, target.size() - 1);
  auto domain_size = [&](const std::vector<std::size_t>& pick) {
    std::size_t total = category == Category::Act0 ? 1 : 0;
    for (std::size_t i : pick) {
      total += pool[i].se.size() - (category == Category::Act0 ? 1 : 0);
    }
    return total;
  };

  bool stopped = false;
  std::vector<std::size_t> pick;
  auto try_pick = [&]() {
    std::vector<Act> parts;
    std::vector<Elem> es;
    for (std::size_t i : pick) {
      parts.push_back(pool[i].se);
      es.push_back(pool[i].e);
    }
    Act domain = parts.size() == 1
                     ? parts.front()
                     : coproduct(monoid, category, parts).first;
    std::vector<Subact> maximal = maximal_proper_subacts(domain);
    std::vector<bool> hit(target.size());
    for_each_hom(domain, target, [&](const std::vector<Elem>& map) {
      std::fill(hit.begin(), hit.end(), false);
      for (Elem y : map) {
        hit[y] = true;
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        return true;
      }
      ActHom f = HomBuilder::trusted(domain, target, map);
      if (auto cover = cover_against(f, maximal)) {
        if (!visit(ProjectiveCover{std::move(*cover), es})) {
          stopped = true;
          return false;
        }
      }
      return true;
    });
  };
  std::function<void(std::size_t, std::size_t)> extend =
      [&](std::size_t start, std::size_t k) {
        if (stopped) {
          return;
        }
        if (pick.size() == k) {
          try_pick();
          return;
        }
        for (std::size_t i = start; i < pool.size() && !stopped; ++i) {
          bool zero_summand = pool[i].e == monoid.zero();
          if (category == Category::Act0 && zero_summand && k > 1) {
            continue;  // θ is the unit of the wedge
          }
          pick.push_back(i);
          if (domain_size(pick) <= size_bound) {
            extend(i, k);
          }
          pick.pop_back();
        }
      };
  for (std::size_t k = 1; k <= max_summands && !stopped; ++k) {
    extend(0, k);
  }
}

std::optional<ProjectiveCover> projective_cover(
    const Act& a, Category category, std::optional<std::size_t> size_bound) {
  std::optional<ProjectiveCover> found;
  for_each_projective_cover(
      a, category, size_bound.value_or(default_cover_bound(a)),
      [&](const ProjectiveCover& pc) {
        found = pc;
        return false;
      });
  return found;
}

}  // namespace monact
