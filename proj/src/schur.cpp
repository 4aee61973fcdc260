#include "zzschur/schur.hpp"

#include <sstream>

#include "zzschur/linalg.hpp"

namespace zzschur {

namespace {

std::vector<int> colors_from_action(
    int dim, int levels, const std::vector<int>& e,
    const std::function<Expansion(int, int)>& act, const char* what) {
  std::vector<int> out(dim, -1);
  for (int t = 0; t < dim; ++t) {
    for (int j = 0; j < levels; ++j) {
      Expansion p = act(e[j], t);
      if (p == Expansion{{t, Int(1)}}) {
        if (out[t] >= 0)
          throw std::logic_error(std::string(what) + ": color not unique");
        out[t] = j;
      } else if (!p.empty()) {
        throw std::logic_error(std::string(what) +
                               ": idempotent acts neither as identity nor zero");
      }
    }
    if (out[t] < 0)
      throw std::logic_error(std::string(what) + ": no color found");
  }
  return out;
}

}  // namespace

std::vector<int> left_colors(const SuperAlgebra& a) {
  if (!a.heredity()) throw std::invalid_argument("left_colors: no heredity data");
  const auto& h = *a.heredity();
  return colors_from_action(
      a.dim(), h.levels(), h.e,
      [&](int e, int t) { return a.mult(e, t); }, "left_colors");
}

std::vector<int> right_colors(const SuperAlgebra& a) {
  if (!a.heredity())
    throw std::invalid_argument("right_colors: no heredity data");
  const auto& h = *a.heredity();
  return colors_from_action(
      a.dim(), h.levels(), h.e,
      [&](int e, int t) { return a.mult(t, e); }, "right_colors");
}

std::vector<int> module_left_colors(const CalModule& v) {
  const SuperAlgebra& a = v.algebra();
  if (!a.heredity())
    throw std::invalid_argument("module_left_colors: no heredity data");
  const auto& h = *a.heredity();
  return colors_from_action(
      v.dim(), h.levels(), h.e,
      [&](int e, int t) { return v.act(e, t); }, "module_left_colors");
}

std::vector<int> module_right_colors(const CalModule& v) {
  if (v.side() != Side::right)
    throw std::invalid_argument("module_right_colors: expects a right module");
  return module_left_colors(v);  // the table already stores t . a
}

SchurAlgebra::SchurAlgebra(const SuperAlgebra* base, int n, int d)
    : base_(base), n_(n), d_(d) {
  if (n < 1 || d < 0) throw std::invalid_argument("SchurAlgebra: bad n or d");
  mn_ = std::make_unique<SuperAlgebra>(matrix_superalgebra(*base_, n_));
  gamma_ = std::make_unique<DividedPowerAlgebra>(mn_.get(), d_);
  levels_ = base_->heredity() ? base_->heredity()->levels() : 0;
  if (levels_ > 0) {
    left_color_ = left_colors(*base_);
    right_color_ = right_colors(*base_);
    const int ell = levels_ - 1;
    lweight_.reserve(dim());
    rweight_.reserve(dim());
    for (int i = 0; i < dim(); ++i) {
      Weight lw, rw;
      lw.comp.assign(levels_, Composition(n_, 0));
      rw.comp.assign(levels_, Composition(n_, 0));
      for (int m : gamma_->index(i).entries) {
        int b = m / (n_ * n_);
        int r = (m / n_) % n_;
        int s = m % n_;
        lw.comp[left_color_[b]][r] += 1;
        rw.comp[right_color_[b]][s] += 1;
      }
      lweight_.push_back(std::move(lw));
      rweight_.push_back(std::move(rw));
    }
    (void)ell;
  }
}

int SchurAlgebra::eta_idempotent(const Weight& la) const {
  if (levels_ == 0)
    throw std::invalid_argument("eta_idempotent: no heredity data");
  if (static_cast<int>(la.comp.size()) != levels_ || la.total() != d_)
    throw std::invalid_argument("eta_idempotent: weight size mismatch");
  const auto& h = *base_->heredity();
  std::vector<int> tuple;
  for (int i = 0; i < levels_; ++i)
    for (int r = 0; r < n_; ++r)
      for (int k = 0; k < la.comp[i][r]; ++k)
        tuple.push_back(matrix_index(h.e[i], r, r));
  std::sort(tuple.begin(), tuple.end());
  return gamma_->index_of(tuple);
}

std::vector<int> SchurAlgebra::eta_idempotents() const {
  std::vector<int> out;
  for (const auto& la : all_weights(n_, d_, levels_ - 1))
    out.push_back(eta_idempotent(la));
  return out;
}

std::string SchurAlgebra::index_name(int i) const {
  std::ostringstream os;
  os << "eta[";
  const auto& entries = gamma_->index(i).entries;
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) os << "|";
    os << mn_->element(entries[k]).name;
  }
  os << "]";
  return os.str();
}

GammaVectorModule::GammaVectorModule(const SchurAlgebra& schur,
                                     const CalModule& v)
    : schur_(&schur) {
  if (&v.algebra() != &schur.base())
    throw std::invalid_argument("GammaVectorModule: module is not over the base");
  if (v.side() == Side::left)
    carrier_ = std::make_unique<CalModule>(
        column_module(schur.matrix_algebra(), v, schur.n()));
  else
    carrier_ = std::make_unique<CalModule>(
        row_module(schur.matrix_algebra(), v, schur.n()));
  dp_ = std::make_unique<DividedPowerModule>(&schur.gamma(), carrier_.get());
  std::vector<int> colors = v.side() == Side::left ? module_left_colors(v)
                                                   : module_right_colors(v);
  const int n = schur.n();
  const int levels = schur.levels();
  weights_.reserve(dp_->dim());
  for (int i = 0; i < dp_->dim(); ++i) {
    Weight w;
    w.comp.assign(levels, Composition(n, 0));
    for (int m : dp_->index(i).entries) {
      int t = m / n;
      int r = m % n;
      w.comp[colors[t]][r] += 1;
    }
    weights_.push_back(std::move(w));
  }
}

Character GammaVectorModule::weight_character() const {
  return weight_character_by_counting(weights_);
}

Character weight_character_by_counting(const std::vector<Weight>& weights) {
  Character ch;
  for (const auto& w : weights) ch[w] += 1;
  return ch;
}

Character weight_character_by_rank(const SchurAlgebra& schur,
                                   const DividedPowerModule& m) {
  Character ch;
  Field q = Field::rationals();
  for (const auto& la : all_weights(schur.n(), schur.d(), schur.levels() - 1)) {
    int eta = schur.eta_idempotent(la);
    ExactMatrix proj(m.dim(), m.dim(), q);
    for (int v = 0; v < m.dim(); ++v)
      for (const auto& [w, c] : m.act(eta, v)) proj.add(w, v, Rat(c));
    int r = proj.rank();
    if (r > 0) ch[la] = r;
  }
  return ch;
}

std::vector<Weight> matrix_carrier_weights(const DividedPowerModule& m,
                                           const std::vector<int>& colors,
                                           int n, int levels, bool use_row) {
  std::vector<Weight> out;
  out.reserve(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    Weight w;
    w.comp.assign(levels, Composition(n, 0));
    for (int e : m.index(i).entries) {
      int t = e / (n * n);
      int r = (e / n) % n;
      int s = e % n;
      w.comp[colors[t]][use_row ? r : s] += 1;
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace zzschur
