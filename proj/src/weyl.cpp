#include "quivchow/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace quivchow {

WeylElement::WeylElement(std::vector<std::vector<int>> permutations) : perms_(std::move(permutations)) {
  for (const auto& p : perms_) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k)) throw InputError("not a permutation");
  }
}

WeylElement WeylElement::identity(const VariableLayout& layout) {
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < layout.vertex_count(); ++i) {
    std::vector<int> p(static_cast<std::size_t>(layout.block_size(i)));
    std::iota(p.begin(), p.end(), 0);
    perms.push_back(std::move(p));
  }
  return WeylElement(std::move(perms));
}

int WeylElement::sign() const {
  int s = 1;
  for (const auto& p : perms_)
    for (std::size_t k = 0; k < p.size(); ++k)
      for (std::size_t l = k + 1; l < p.size(); ++l)
        if (p[k] > p[l]) s = -s;
  return s;
}

WeylElement WeylElement::inverse() const {
  auto inv = perms_;
  for (std::size_t i = 0; i < perms_.size(); ++i)
    for (std::size_t k = 0; k < perms_[i].size(); ++k) inv[i][perms_[i][k]] = static_cast<int>(k);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& sigma, const WeylElement& tau) {
  if (sigma.perms_.size() != tau.perms_.size()) throw InputError("Weyl elements of different shape");
  auto out = tau.perms_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (sigma.perms_[i].size() != tau.perms_[i].size())
      throw InputError("Weyl elements of different shape");
    for (std::size_t k = 0; k < out[i].size(); ++k) out[i][k] = sigma.perms_[i][tau.perms_[i][k]];
  }
  return WeylElement(std::move(out));
}

std::size_t weyl_group_order(const VariableLayout& layout) {
  std::size_t n = 1;
  for (int i = 0; i < layout.vertex_count(); ++i)
    for (int k = 2; k <= layout.block_size(i); ++k) n *= static_cast<std::size_t>(k);
  return n;
}

std::vector<WeylElement> weyl_group(const VariableLayout& layout) {
  std::vector<std::vector<std::vector<int>>> per_vertex;
  for (int i = 0; i < layout.vertex_count(); ++i) {
    std::vector<int> p(static_cast<std::size_t>(layout.block_size(i)));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    per_vertex.push_back(std::move(all));
  }
  std::vector<WeylElement> out;
  out.reserve(weyl_group_order(layout));
  std::vector<std::size_t> idx(per_vertex.size(), 0);
  while (true) {
    std::vector<std::vector<int>> perms;
    for (std::size_t i = 0; i < per_vertex.size(); ++i) perms.push_back(per_vertex[i][idx[i]]);
    out.emplace_back(std::move(perms));
    std::size_t i = per_vertex.size();
    while (i > 0 && idx[i - 1] + 1 == per_vertex[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return out;
}

ChernPoly act(const WeylElement& sigma, const ChernPoly& f, const VariableLayout& layout) {
  if (sigma.permutations().size() != static_cast<std::size_t>(layout.vertex_count()))
    throw InputError("Weyl element does not match the variable layout");
  std::vector<std::size_t> image(layout.variable_count());
  for (int i = 0; i < layout.vertex_count(); ++i) {
    const auto& p = sigma.permutations()[i];
    if (p.size() != static_cast<std::size_t>(layout.block_size(i)))
      throw InputError("Weyl element does not match the variable layout");
    for (int k = 0; k < layout.block_size(i); ++k)
      image[layout.offset(i) + k] = layout.offset(i) + static_cast<std::size_t>(p[k]);
  }
  ChernPoly out(f.variable_count());
  for (const auto& [e, c] : f.terms()) {
    Exponents moved(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) moved[image[v]] = e[v];
    out.add_term(moved, c);
  }
  return out;
}

}  // namespace quivchow
