#include "quivchow/presentation.hpp"

#include <future>
#include <numeric>

#include "quivchow/classes.hpp"
#include "quivchow/symmetric.hpp"

namespace quivchow {

// ChowClass

ChowClass::ChowClass(const Presentation& p, std::vector<VectorQ> parts) : p_(&p), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != p.top_degree() + 1)
    throw InputError("Chow class has the wrong number of graded parts");
}

ChowClass ChowClass::zero(const Presentation& p) {
  std::vector<VectorQ> parts;
  for (int n = 0; n <= p.top_degree(); ++n)
    parts.push_back(VectorQ::Zero(static_cast<Eigen::Index>(p.piece(n).basis.size())));
  return ChowClass(p, std::move(parts));
}

ChowClass ChowClass::homogeneous(int degree) const {
  ChowClass out = zero(*p_);
  out.parts_[degree] = parts_[degree];
  return out;
}

Rational ChowClass::constant_term() const { return parts_[0].size() ? parts_[0][0] : Rational(0); }

ChowClass ChowClass::constant(const Rational& c) const {
  ChowClass out = zero(*p_);
  if (out.parts_[0].size()) out.parts_[0][0] = c;
  return out;
}

int ChowClass::truncation() const { return p_->top_degree(); }

bool ChowClass::is_zero() const {
  for (const auto& v : parts_)
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (v[j] != 0) return false;
  return true;
}

ChowClass ChowClass::scale_degrees(std::span<const Rational> factors) const {
  ChowClass out = *this;
  for (std::size_t n = 0; n < out.parts_.size(); ++n) {
    const Rational f = n < factors.size() ? factors[n] : Rational(0);
    for (Eigen::Index j = 0; j < out.parts_[n].size(); ++j)
      if (out.parts_[n][j] != 0) out.parts_[n][j] *= f;
  }
  return out;
}

ChowClass ChowClass::alternate() const {
  ChowClass out = *this;
  for (std::size_t n = 1; n < out.parts_.size(); n += 2) out.parts_[n] = -out.parts_[n];
  return out;
}

ChernPoly ChowClass::to_polynomial() const {
  ChernPoly out(p_->layout().variable_count());
  for (int n = 0; n <= p_->top_degree(); ++n) {
    const auto& piece = p_->piece(n);
    for (std::size_t b = 0; b < piece.basis.size(); ++b)
      out.add_term(piece.monomials[piece.basis[b]], parts_[n][static_cast<Eigen::Index>(b)]);
  }
  return out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass out = a;
  for (std::size_t n = 0; n < out.parts_.size(); ++n) out.parts_[n] += b.parts_[n];
  return out;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  ChowClass out = a;
  for (std::size_t n = 0; n < out.parts_.size(); ++n) out.parts_[n] -= b.parts_[n];
  return out;
}

ChowClass operator-(const ChowClass& a) { return a * Rational(-1); }

ChowClass operator*(const ChowClass& a, const Rational& s) {
  ChowClass out = a;
  for (auto& v : out.parts_)
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (v[j] != 0) v[j] *= s;
  return out;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  const Presentation& p = *a.p_;
  ChowClass out = ChowClass::zero(p);
  const int top = p.top_degree();
  for (int da = 0; da <= top; ++da) {
    const VectorQ& va = a.parts_[da];
    for (Eigen::Index i = 0; i < va.size(); ++i) {
      if (va[i] == 0) continue;
      for (int db = 0; da + db <= top; ++db) {
        const VectorQ& vb = b.parts_[db];
        VectorQ& target = out.parts_[da + db];
        const MatrixQ& red = p.piece(da + db).reduction;
        for (Eigen::Index j = 0; j < vb.size(); ++j) {
          if (vb[j] == 0) continue;
          const Rational c = va[i] * vb[j];
          const Eigen::Index col = p.product_column(da, static_cast<std::size_t>(i), db,
                                                    static_cast<std::size_t>(j));
          for (Eigen::Index r = 0; r < target.size(); ++r)
            if (red(r, col) != 0) target[r] += c * red(r, col);
        }
      }
    }
  }
  return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) { return a.parts_ == b.parts_; }

// Presentation

Presentation::Presentation(ModuliData data, int top)
    : data_(std::move(data)), layout_(data_.d), top_(top), eliminated_value_(layout_.variable_count()) {}

std::vector<int> Presentation::quotient_dimensions() const {
  std::vector<int> out;
  for (const auto& piece : pieces_) out.push_back(static_cast<int>(piece.basis.size()));
  return out;
}

ChowClass Presentation::normal_form(const ChernPoly& f) const {
  const auto& weights = *layout_.chern_weights();
  const ChernPoly g = substitute(f, eliminated_, eliminated_value_);
  ChowClass out = ChowClass::zero(*this);
  std::vector<VectorQ> parts = out.parts();
  for (const auto& [e, c] : g.terms()) {
    const int n = e.weighted_degree(weights);
    if (n > top_) continue;
    const auto& piece = pieces_[n];
    const Eigen::Index col = piece.column.at(e);
    for (Eigen::Index r = 0; r < parts[n].size(); ++r)
      if (piece.reduction(r, col) != 0) parts[n][r] += c * piece.reduction(r, col);
  }
  return ChowClass(*this, std::move(parts));
}

Rational Presentation::integrate(const ChowClass& c) const {
  if (pieces_[top_].basis.size() != 1)
    throw StructuralError("top-degree quotient is not one-dimensional; integration undefined");
  if (point_coordinate_ == 0) throw StructuralError("point class vanishes: moduli empty or assumptions violated");
  return c.component(top_)[0] / point_coordinate_;
}

Eigen::Index Presentation::product_column(int p, std::size_t i, int q, std::size_t j) const {
  return products_[p][q][i * pieces_[q].basis.size() + j];
}

namespace {

std::vector<Exponents> monomials_of_degree(const std::vector<int>& weights, std::size_t skip, int n) {
  std::vector<Exponents> out;
  Exponents cur(weights.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == weights.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (v == skip) {
      rec(v + 1, left);
      return;
    }
    for (int k = 0; k * weights[v] <= left; ++k) {
      cur[v] = static_cast<std::uint8_t>(k);
      rec(v + 1, left - k * weights[v]);
    }
    cur[v] = 0;
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b < a; });
  return out;
}

int relation_degree(const ModuliData& data, const DimVector& dprime) {
  int deg = 0;
  for (const auto& a : data.quiver.arrows())
    deg += static_cast<int>(dprime[a.source] * (data.d[a.target] - dprime[a.target]));
  return deg;
}

}  // namespace

ChernPoly relation_polynomial(const ModuliData& data, const VariableLayout& layout, const DimVector& dprime) {
  if (dprime.size() != data.d.size()) throw InputError("d' has the wrong length");
  bool zero = true;
  for (std::size_t i = 0; i < dprime.size(); ++i) {
    if (dprime[i] < 0 || dprime[i] > data.d[i]) throw InputError("d' is not a subvector of d");
    zero = zero && dprime[i] == 0;
  }
  if (zero || dprime == data.d) throw InputError("d' must be a proper nonzero subvector of d");
  ChernPoly f = ChernPoly::one(layout.variable_count());
  for (const auto& a : data.quiver.arrows())
    for (int k = 1; k <= dprime[a.source]; ++k)
      for (int l = static_cast<int>(dprime[a.target]) + 1; l <= data.d[a.target]; ++l)
        f = f * (layout.root(a.target, l) - layout.root(a.source, k));
  return f;
}

std::vector<DimVector> minimal_relation_sources(const ModuliData& data, const std::vector<DimVector>& forbidden) {
  // Distinct root differences are coprime, so divisibility is containment
  // of the factor sets {(a, k, l)} arrow by arrow.
  auto divides = [&](const DimVector& small, const DimVector& big) {
    for (const auto& a : data.quiver.arrows()) {
      const bool empty = small[a.source] == 0 || small[a.target] == data.d[a.target];
      if (empty) continue;
      if (small[a.source] > big[a.source] || small[a.target] < big[a.target]) return false;
    }
    return true;
  };
  std::vector<DimVector> out;
  for (std::size_t j = 0; j < forbidden.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < forbidden.size() && !redundant; ++i) {
      if (i == j || !divides(forbidden[i], forbidden[j])) continue;
      // Equal factor sets: keep the first occurrence only.
      redundant = !divides(forbidden[j], forbidden[i]) || i < j;
    }
    if (!redundant) out.push_back(forbidden[j]);
  }
  return out;
}

std::unique_ptr<Presentation> build_presentation(const ModuliData& data, int top, const BuildOptions& options) {
  data.validate();
  const std::int64_t dim = data.dimension();
  if (dim < 0) throw AssumptionError("expected dimension is negative: the moduli space is empty");
  if (top < 0) top = static_cast<int>(dim);

  std::unique_ptr<Presentation> p(new Presentation(data, top));
  const VariableLayout& layout = p->layout_;
  const std::size_t nvars = layout.variable_count();
  const auto& weights = *layout.chern_weights();

  // Linear relation sum a_i x_{i,1}; eliminate x_{i0,1} for the first usable vertex.
  ChernPoly linear(nvars);
  int i0 = -1;
  for (int i = 0; i < layout.vertex_count(); ++i) {
    if (layout.block_size(i) == 0 || data.a[i] == 0) continue;
    linear += layout.chern(i, 1) * Rational(data.a[i]);
    if (i0 < 0) i0 = i;
  }
  p->eliminated_ = layout.index(i0, 1);
  p->eliminated_value_ = (linear - layout.chern(i0, 1) * Rational(data.a[i0])) * (Rational(-1) / Rational(data.a[i0]));
  p->relations_.push_back(linear);

  // Tautological relations rho(f_{d'} b), b in the descending basis.
  const auto forbidden = forbidden_vectors(data.quiver, data.d, data.theta);
  p->sources_ = options.prune_relations ? minimal_relation_sources(data, forbidden) : forbidden;
  const auto basis = descending_basis(layout);
  int delta_degree = 0;
  for (int i = 0; i < layout.vertex_count(); ++i) delta_degree += layout.block_size(i) * (layout.block_size(i) - 1) / 2;

  auto relations_for = [&](const DimVector& dprime) {
    const int budget = top + delta_degree - relation_degree(data, dprime);
    if (budget < 0) return std::vector<ChernPoly>{};
    std::vector<Exponents> usable;
    for (const auto& b : basis)
      if (b.total_degree() <= budget) usable.push_back(b);
    const ChernPoly f = relation_polynomial(data, layout, dprime);
    return symmetrize_products(f, usable, layout, top);
  };
  std::vector<std::vector<ChernPoly>> per_source(p->sources_.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.threads));
  if (workers == 1) {
    for (std::size_t s = 0; s < per_source.size(); ++s) per_source[s] = relations_for(p->sources_[s]);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t s = w; s < per_source.size(); s += workers) per_source[s] = relations_for(p->sources_[s]);
      }));
    for (auto& j : jobs) j.get();
  }
  for (auto& group : per_source)
    for (auto& g : group)
      if (!g.is_zero()) p->relations_.push_back(std::move(g));

  // Substituted generators, split by degree.
  std::vector<std::vector<ChernPoly>> by_degree(static_cast<std::size_t>(top) + 1);
  for (std::size_t r = 1; r < p->relations_.size(); ++r) {
    const ChernPoly g = substitute(p->relations_[r], p->eliminated_, p->eliminated_value_);
    for (int n = 0; n <= top; ++n) {
      ChernPoly part = g.homogeneous_component(weights, n);
      if (!part.is_zero()) by_degree[n].push_back(std::move(part));
    }
  }

  // Degree by degree: J_n = span(generators of degree n) + sum_v x_v J_{n - w_v}.
  for (int n = 0; n <= top; ++n) {
    DegreePiece piece;
    piece.monomials = monomials_of_degree(weights, p->eliminated_, n);
    const auto ncols = static_cast<Eigen::Index>(piece.monomials.size());
    for (Eigen::Index c = 0; c < ncols; ++c) piece.column.emplace(piece.monomials[c], c);
    RowEchelon<Rational> ech(ncols);
    for (std::size_t v = 0; v < nvars && !ech.full(); ++v) {
      if (v == p->eliminated_ || weights[v] > n) continue;
      const auto& lower = p->pieces_[n - weights[v]];
      std::vector<Eigen::Index> shift(lower.monomials.size());
      for (std::size_t c = 0; c < shift.size(); ++c) {
        Exponents m = lower.monomials[c];
        ++m[v];
        shift[c] = piece.column.at(m);
      }
      for (const auto& row : lower.ideal_basis) {
        if (ech.full()) break;
        VectorQ vec = VectorQ::Zero(ncols);
        for (Eigen::Index c = 0; c < row.size(); ++c)
          if (row[c] != 0) vec[shift[c]] = row[c];
        ech.insert(std::move(vec));
      }
    }
    for (const auto& g : by_degree[n]) {
      if (ech.full()) break;
      VectorQ vec = VectorQ::Zero(ncols);
      for (const auto& [e, c] : g.terms()) vec[piece.column.at(e)] += c;
      ech.insert(std::move(vec));
    }
    piece.ideal_basis = ech.rows();
    for (auto c : ech.free_columns()) piece.basis.push_back(c);
    piece.reduction = ech.quotient_map();
    p->pieces_.push_back(std::move(piece));
  }

  // Products of standard monomials.
  p->products_.assign(static_cast<std::size_t>(top) + 1, {});
  for (int a = 0; a <= top; ++a) {
    p->products_[a].resize(static_cast<std::size_t>(top - a) + 1);
    for (int b = 0; a + b <= top; ++b) {
      const auto& pa = p->pieces_[a];
      const auto& pb = p->pieces_[b];
      auto& table = p->products_[a][b];
      table.reserve(pa.basis.size() * pb.basis.size());
      for (auto ca : pa.basis)
        for (auto cb : pb.basis) table.push_back(p->pieces_[a + b].column.at(pa.monomials[ca] + pb.monomials[cb]));
    }
  }

  const auto dims = p->quotient_dimensions();
  if (!options.allow_degenerate) {
    if (dims[0] != 1) throw StructuralError("degree-0 quotient is not one-dimensional: empty or non-coprime moduli");
    if (dims[top] != 1)
      throw StructuralError("top-degree quotient has dimension " + std::to_string(dims[top]) +
                            ", expected 1: empty or non-coprime moduli");
  }
  if (dims[top] == 1) {
    p->point_coordinate_ = point_class_sides(*p).direct_side.component(top)[0];
    if (p->point_coordinate_ == 0 && !options.allow_degenerate)
      throw StructuralError("point class vanishes: moduli empty or assumptions violated");
  }
  return p;
}

}  // namespace quivchow
