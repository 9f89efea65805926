#include "monact/constructions.hpp"

#include <algorithm>

#include "monact/core.hpp"
#include "monact/error.hpp"
#include "monact/structure.hpp"

namespace monact {

namespace {

std::string pair_label(std::size_t index, const std::string& label) {
  return "(" + std::to_string(index) + "," + label + ")";
}

}  // namespace

std::pair<Act, CoproductTag> coproduct(const Monoid& monoid, Category category,
                                       const std::vector<Act>& parts) {
  std::vector<Act> views;
  for (auto const& p : parts) {
    if (!p.monoid().same_structure(monoid)) {
      throw Error(ErrorKind::MonoidMismatch, "coproduct of acts over different monoids");
    }
    views.push_back(p.in_category(category));
  }
  std::size_t const m = monoid.size();
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> rows(m);
  // offset[i][a]: position of element a of part i in the coproduct.
  std::vector<std::vector<Elem>> position(views.size());

  if (category == Category::ActO) {
    for (std::size_t i = 0; i < views.size(); ++i) {
      for (Elem a = 0; a < views[i].size(); ++a) {
        position[i].push_back(static_cast<Elem>(labels.size()));
        labels.push_back(pair_label(i, views[i].label(a)));
      }
    }
  } else {
    labels.push_back("θ");
    for (std::size_t i = 0; i < views.size(); ++i) {
      for (Elem a = 0; a < views[i].size(); ++a) {
        if (a == views[i].theta()) {
          position[i].push_back(0);
        } else {
          position[i].push_back(static_cast<Elem>(labels.size()));
          labels.push_back(pair_label(i, views[i].label(a)));
        }
      }
    }
  }
  for (Elem s = 0; s < m; ++s) {
    rows[s].resize(labels.size(), 0);
    for (std::size_t i = 0; i < views.size(); ++i) {
      for (Elem a = 0; a < views[i].size(); ++a) {
        rows[s][position[i][a]] = position[i][views[i].act(s, a)];
      }
    }
  }
  Act sum = labels.empty()
                ? Act::empty(monoid)
                : Act::validate(monoid, std::move(labels), std::move(rows),
                                category);
  CoproductTag tag{category, {}};
  for (std::size_t i = 0; i < views.size(); ++i) {
    tag.injections.push_back(
        HomBuilder::trusted(views[i], sum, std::move(position[i])));
  }
  return {sum, std::move(tag)};
}

std::pair<Act, CoproductTag> coproduct(Category category,
                                       const std::vector<Act>& parts) {
  if (parts.empty()) {
    throw Error(ErrorKind::EmptyFamily, "coproduct needs the monoid of an empty family");
  }
  return coproduct(parts.front().monoid(), category, parts);
}

Act product(Category category, const std::vector<Act>& parts,
            std::size_t max_factors) {
  if (parts.empty()) {
    throw Error(ErrorKind::EmptyFamily, "product of an empty family");
  }
  if (parts.size() > max_factors) {
    throw Error(ErrorKind::BoundTooLarge,
                std::to_string(parts.size()) + " factors exceed the bound " +
                    std::to_string(max_factors));
  }
  Monoid const& monoid = parts.front().monoid();
  std::vector<Act> views;
  std::size_t total = 1;
  for (auto const& p : parts) {
    require_same_monoid(parts.front(), p);
    views.push_back(p.in_category(category));
    total *= p.size();
  }
  if (total == 0) {
    return Act::empty(monoid);
  }
  // Mixed-radix coordinates, first factor most significant.
  auto decode = [&](std::size_t index) {
    std::vector<Elem> coords(views.size());
    for (std::size_t i = views.size(); i-- > 0;) {
      coords[i] = static_cast<Elem>(index % views[i].size());
      index /= views[i].size();
    }
    return coords;
  };
  auto encode = [&](const std::vector<Elem>& coords) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < views.size(); ++i) {
      index = index * views[i].size() + coords[i];
    }
    return static_cast<Elem>(index);
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> rows(monoid.size(),
                                      std::vector<Elem>(total));
  for (std::size_t index = 0; index < total; ++index) {
    auto coords = decode(index);
    std::string label = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      label += (i ? "," : "") + views[i].label(coords[i]);
    }
    labels.push_back(label + ")");
    for (Elem s = 0; s < monoid.size(); ++s) {
      std::vector<Elem> image(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) {
        image[i] = views[i].act(s, coords[i]);
      }
      rows[s][index] = encode(image);
    }
  }
  return Act::validate(monoid, std::move(labels), std::move(rows), category);
}

Act theta_act(const Monoid& monoid, Category category) {
  std::vector<std::vector<Elem>> rows(monoid.size(), std::vector<Elem>{0});
  return Act::validate(monoid, {"θ"}, std::move(rows), category);
}

Act regular_act(const Monoid& monoid, Category category) {
  std::vector<std::vector<Elem>> rows(monoid.size());
  for (Elem s = 0; s < monoid.size(); ++s) {
    for (Elem t = 0; t < monoid.size(); ++t) {
      rows[s].push_back(monoid.mul(s, t));
    }
  }
  return Act::validate(monoid, monoid.labels(), std::move(rows), category);
}

FunctorImage functor_F_obj(const Act& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptyAct, "F is undefined on the empty act");
  }
  Act source = a.in_category(Category::ActO);
  Subact zeros = zero_set(source);
  auto [quotient, projection] = rees_quotient(source, zeros);
  Elem theta = projection(zeros.members().front());
  if (zeros.size() > 1 && !quotient.find("θ")) {
    auto labels = quotient.labels();
    labels[theta] = "θ";
    quotient = quotient.relabeled(std::move(labels));
  }
  Act image = quotient.in_category(Category::Act0);
  return {image, HomBuilder::trusted(source, quotient, projection.map())};
}

ActHom functor_F_mor(const ActHom& alpha) {
  auto from = functor_F_obj(alpha.source());
  auto to = functor_F_obj(alpha.target());
  std::vector<Elem> map(from.act.size(), 0);
  for (Elem a = 0; a < alpha.source().size(); ++a) {
    map[from.projection(a)] = to.projection(alpha(a));
  }
  return ActHom::make(from.act, to.act, std::move(map));
}

ActHom reflection_factorization(const ActHom& f) {
  Act target = f.target().in_category(Category::Act0);
  auto from = functor_F_obj(f.source());
  std::vector<Elem> map(from.act.size(), 0);
  std::vector<bool> set(from.act.size(), false);
  for (Elem a = 0; a < f.source().size(); ++a) {
    Elem cls = from.projection(a);
    if (set[cls] && map[cls] != f(a)) {
      throw Error(ErrorKind::NotAHom, "f does not factor through F(A)");
    }
    map[cls] = f(a);
    set[cls] = true;
  }
  return ActHom::make(from.act, target, std::move(map));
}

Monoid adjoin_zero(const std::vector<std::string>& labels,
                   const std::vector<std::vector<Elem>>& table,
                   Elem one,
                   const std::string& zero_label) {
  if (std::find(labels.begin(), labels.end(), zero_label) != labels.end()) {
    throw Error(ErrorKind::LabelClash, "label '" + zero_label + "' is taken");
  }
  std::size_t const n = labels.size();
  if (table.size() != n) {
    throw Error(ErrorKind::BadTable, "table rows do not match labels");
  }
  for (auto const& row : table) {
    if (row.size() != n) {
      throw Error(ErrorKind::BadTable, "table is not square");
    }
  }
  auto new_labels = labels;
  new_labels.push_back(zero_label);
  auto const zero = static_cast<Elem>(n);
  std::vector<std::vector<Elem>> extended(n + 1, std::vector<Elem>(n + 1, zero));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      extended[x][y] = table[x][y];
    }
  }
  // validate() rechecks associativity and the identity on the extension,
  // which holds iff it held on the input.
  return Monoid::validate(std::move(new_labels), std::move(extended), one,
                          zero);
}

Monoid adjoin_zero(const Monoid& monoid, const std::string& zero_label) {
  std::vector<std::vector<Elem>> table(monoid.size());
  for (Elem x = 0; x < monoid.size(); ++x) {
    for (Elem y = 0; y < monoid.size(); ++y) {
      table[x].push_back(monoid.mul(x, y));
    }
  }
  return adjoin_zero(monoid.labels(), table, monoid.one(), zero_label);
}

SubstantialDecomposition substantial_summand(const Act& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptyAct, "substantial summand of the empty act");
  }
  Act source = a.in_category(Category::ActO);
  Decomposition dec = decompose(source, Category::ActO);
  ElemSet substantial(source.size(), false);
  std::vector<Elem> discrete;
  for (auto const& comp : dec.components) {
    bool inside_zeros = true;
    for (Elem x : comp.members()) {
      inside_zeros = inside_zeros && source.is_zero(x);
    }
    if (!inside_zeros) {
      for (Elem x : comp.members()) {
        substantial[x] = true;
      }
    } else {
      discrete.push_back(comp.members().front());
    }
  }
  bool any = std::find(substantial.begin(), substantial.end(), true) !=
             substantial.end();
  if (!any) {
    // Only θ components: keep the first as the substantial summand.
    substantial[discrete.front()] = true;
    discrete.erase(discrete.begin());
  }
  Subact sub = Subact::make(source, std::move(substantial));
  std::vector<Act> parts{sub.as_act()};
  for (std::size_t i = 0; i < discrete.size(); ++i) {
    parts.push_back(theta_act(source.monoid(), Category::ActO));
  }
  auto [sum, tag] = coproduct(source.monoid(), Category::ActO, parts);
  std::vector<Elem> map(sum.size(), 0);
  auto members = sub.members();
  for (Elem i = 0; i < members.size(); ++i) {
    map[tag.injections[0](i)] = members[i];
  }
  for (std::size_t k = 0; k < discrete.size(); ++k) {
    map[tag.injections[k + 1](0)] = discrete[k];
  }
  ActHom reconstruction = ActHom::make(sum, source, std::move(map));
  if (!reconstruction.is_injective() || !reconstruction.is_surjective()) {
    throw Error(ErrorKind::NotAHom, "substantial reconstruction is not bijective");
  }
  return {std::move(sub), std::move(discrete), std::move(reconstruction)};
}

}  // namespace monact
