#include "gfs/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfs/rng.hpp"
#include "gfs/serialize.hpp"

namespace gfs {

namespace {

// Dimension first, then descending rounded values so the trivial row sorts
// to the front of its dimension block.
bool row_less(const IrrepRow& a, const IrrepRow& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (Eigen::Index i = 0; i < a.values.size(); ++i) {
    const double are = std::round(a.values(i).real() * 1e6) / 1e6;
    const double bre = std::round(b.values(i).real() * 1e6) / 1e6;
    if (are != bre) return are > bre;
    const double aim = std::round(a.values(i).imag() * 1e6) / 1e6;
    const double bim = std::round(b.values(i).imag() * 1e6) / 1e6;
    if (aim != bim) return aim > bim;
  }
  return false;
}

void assign_labels(std::vector<IrrepRow>& rows) {
  std::sort(rows.begin(), rows.end(), row_less);
  int current_dim = -1;
  int letter = 0;
  for (IrrepRow& r : rows) {
    if (r.dim != current_dim) {
      current_dim = r.dim;
      letter = 0;
    }
    std::string suffix;
    int x = letter++;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + x % 26));
      x = x / 26 - 1;
    } while (x >= 0);
    r.label = std::to_string(r.dim) + suffix;
  }
}

}  // namespace

CharacterTable::CharacterTable(const FiniteGroup& G, std::vector<IrrepRow> rows)
    : group_(std::make_shared<const FiniteGroup>(G)), rows_(std::move(rows)) {
  if (rows_.size() != G.classes().size())
    throw std::invalid_argument("character table: row count != class count");
  for (const IrrepRow& r : rows_)
    if (static_cast<std::size_t>(r.values.size()) != G.classes().size())
      throw std::invalid_argument("character table: row width != class count");
  if (rows_.empty() || !rows_.front().label.empty()) return;
  assign_labels(rows_);
}

int CharacterTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("character table: no irrep labelled '" + label + "'");
}

cplx CharacterTable::normalized(std::size_t irrep, std::size_t cls) const {
  return rows_[irrep].values(cls) / static_cast<double>(rows_[irrep].dim);
}

cplx CharacterTable::normalized_at_element(std::size_t irrep, ElemId g) const {
  return normalized(irrep, group_->class_of(g));
}

std::string CharacterTable::trivial_label() const {
  for (const IrrepRow& r : rows_) {
    if (r.dim != 1) continue;
    bool all_one = true;
    for (Eigen::Index i = 0; i < r.values.size(); ++i)
      if (std::abs(r.values(i) - cplx(1.0, 0.0)) > 1e-6) all_one = false;
    if (all_one) return r.label;
  }
  throw std::runtime_error("character table: trivial row not found");
}

cplx CharacterTable::inner_product(std::size_t a, std::size_t b) const {
  cplx acc = 0.0;
  const auto& classes = group_->classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    acc += static_cast<double>(classes[i].member_ids.size()) * rows_[a].values(i) *
           std::conj(rows_[b].values(i));
  return acc / static_cast<double>(group_->order());
}

double CharacterTable::row_orthogonality_residual() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const cplx ip = inner_product(a, b);
      worst = std::max(worst, std::abs(ip - (a == b ? cplx(1.0) : cplx(0.0))));
    }
  return worst;
}

double CharacterTable::column_orthogonality_residual() const {
  const auto& classes = group_->classes();
  double worst = 0.0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      cplx acc = 0.0;
      for (const IrrepRow& r : rows_) acc += r.values(i) * std::conj(r.values(j));
      const double expected =
          i == j ? static_cast<double>(group_->order()) / classes[i].member_ids.size() : 0.0;
      worst = std::max(worst, std::abs(acc - expected));
    }
  return worst;
}

std::string CharacterTable::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.field("group", group_->name());
  w.field("order", static_cast<long long>(group_->order()));
  w.begin_array("classes");
  for (const ConjugacyClass& c : group_->classes()) {
    w.begin_unkeyed_object();
    w.field("representative_id", static_cast<long long>(c.representative_id));
    w.field("size", static_cast<long long>(c.member_ids.size()));
    w.end_object();
  }
  w.end_array();
  w.begin_array("irreps");
  for (const IrrepRow& r : rows_) {
    w.begin_unkeyed_object();
    w.field("label", r.label);
    w.field("dim", r.dim);
    w.begin_array("values");
    for (Eigen::Index i = 0; i < r.values.size(); ++i) w.element(cplx(r.values(i)));
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

namespace {

struct TableCandidate {
  std::vector<IrrepRow> rows;
  bool ok = false;
  std::string why;
};

TableCandidate try_build(const FiniteGroup& G, const CharTableOptions& opts, Rng& rng) {
  TableCandidate out;
  const auto& classes = G.classes();
  const std::size_t r = classes.size();
  const std::size_t n = G.order();

  // Class-algebra structure constants a[i][j][k]: the number of ways a fixed
  // representative of class k factors as (element of class i) * (element of
  // class j). Computed as r passes of |G| work each. M[i](j, k) = a[i][j][k],
  // so (M[i] v)_j = sum_k a[i][j][k] v_k and the class-sum eigenvectors
  // v_k = |C_k| chi(k) / d satisfy M[i] v = (|C_i| chi(i)/d) v.
  std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
  for (std::size_t k = 0; k < r; ++k) {
    const ElemId z = classes[k].representative_id;
    for (std::size_t i = 0; i < r; ++i)
      for (ElemId x : classes[i].member_ids) {
        const ElemId y = G.mul(G.inv(x), z);
        M[i](G.class_of(y), k) += 1.0;
      }
  }

  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t i = 0; i < r; ++i) combo += rng.symmetric_unit() * M[i];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<cplx>());
  if (solver.info() != Eigen::Success) {
    out.why = "eigensolver failed";
    return out;
  }

  // Distinct eigenvalues are required; a collision means the random
  // combination failed to separate two irreps.
  const Eigen::VectorXcd evals = solver.eigenvalues();
  double scale = 1.0;
  for (std::size_t i = 0; i < r; ++i) scale = std::max(scale, std::abs(evals(i)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (std::abs(evals(a) - evals(b)) < 1e-7 * scale) {
        out.why = "degenerate eigenvalues";
        return out;
      }

  const int identity_class = G.class_of(G.identity());
  std::vector<IrrepRow> rows;
  for (std::size_t c = 0; c < r; ++c) {
    Eigen::VectorXcd v = solver.eigenvectors().col(c);
    if (std::abs(v(identity_class)) < 1e-10) {
      out.why = "eigenvector vanishes at identity class";
      return out;
    }
    v /= v(identity_class);  // now v_i = |C_i| chi(i) / d

    // Dimension from row orthogonality: d^2 sum_i |v_i|^2 / |C_i| = |G|.
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i)
      s += std::norm(v(i)) / static_cast<double>(classes[i].member_ids.size());
    const double d_real = std::sqrt(static_cast<double>(n) / s);
    const int d = static_cast<int>(std::lround(d_real));
    if (d < 1 || std::abs(d_real - d) > 1e-5) {
      out.why = "non-integer irrep dimension " + std::to_string(d_real);
      return out;
    }

    IrrepRow row;
    row.dim = d;
    row.values.resize(static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i)
      row.values(static_cast<Eigen::Index>(i)) =
          v(i) * static_cast<double>(d) / static_cast<double>(classes[i].member_ids.size());
    rows.push_back(std::move(row));
  }

  // Verify sum d^2 = |G| and first orthogonality before accepting.
  long long sum_d2 = 0;
  for (const IrrepRow& row : rows) sum_d2 += static_cast<long long>(row.dim) * row.dim;
  if (sum_d2 != static_cast<long long>(n)) {
    out.why = "sum of squared dimensions != group order";
    return out;
  }
  CharacterTable probe(G, rows);
  if (probe.row_orthogonality_residual() > opts.tol) {
    out.why = "row orthogonality residual too large";
    return out;
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t i = 0; i < r; ++i) {
      if (std::abs(rows[a].values(static_cast<Eigen::Index>(i))) >
          rows[a].dim * (1.0 + opts.tol)) {
        out.why = "normalized character exceeds 1";
        return out;
      }
    }
  }

  out.rows = std::move(rows);
  out.ok = true;
  return out;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& G, const CharTableOptions& opts) {
  Rng rng(Rng::mix(opts.seed, G.order() * 2654435761ULL + G.classes().size()));
  std::string last_error;
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    TableCandidate cand = try_build(G, opts, rng);
    if (cand.ok) return CharacterTable(G, std::move(cand.rows));
    last_error = cand.why;
  }
  throw std::runtime_error("character_table(" + G.name() + "): " + last_error +
                           " after " + std::to_string(opts.max_retries) + " attempts");
}

cplx normalized_character(const CharacterTable& table, std::size_t irrep, std::size_t cls) {
  return table.normalized(irrep, cls);
}

}  // namespace gfs
