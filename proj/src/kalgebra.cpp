#include "monogen/kalgebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace monogen {

// ---------------------------------------------------------------- AlgebraK

AlgebraK::AlgebraK(const Field& F, std::vector<std::string> basis, KElem unit,
                   const std::vector<Entry>& entries)
    : field_(&F), basis_(std::move(basis)), unit_(std::move(unit)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw InputError("algebra dimension must be positive");
  if (unit_.size() != d) throw InputError("unit has wrong length");
  for (auto& u : unit_)
    if (!u.field()) u = F.zero();
  std::vector<std::map<std::size_t, Scalar>> acc(d * d);
  for (const auto& e : entries) {
    if (e.i >= d || e.j >= d || e.k >= d)
      throw InputError("structure constant index out of range");
    if (e.value.field() && e.value.field() != &F)
      throw InputError("structure constant over a different field");
    auto& slot = acc[e.i * d + e.j][e.k];
    slot = slot.field() ? slot + e.value : e.value;
  }
  table_.resize(d * d);
  for (std::size_t p = 0; p < d * d; ++p)
    for (auto& [k, v] : acc[p])
      if (!v.is_zero()) table_[p].emplace_back(k, v);
}

AlgebraK AlgebraK::split(const Field& F, std::size_t d) {
  std::vector<std::string> names;
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    entries.push_back({i, i, i, F.one()});
  }
  return AlgebraK(F, names, Vec(d, F.one()), entries);
}

KElem AlgebraK::basis_vec(std::size_t i) const {
  KElem v = zero();
  v[i] = field_->one();
  return v;
}

std::vector<AlgebraK::Entry> AlgebraK::entries() const {
  std::vector<Entry> out;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, v] : table_[i * d + j]) out.push_back({i, j, k, v});
  return out;
}

KElem AlgebraK::mul(const KElem& a, const KElem& b) const {
  const std::size_t d = dim();
  KElem out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, v] : table_[i * d + j]) out[k] += ab * v;
    }
  }
  return out;
}

Mat AlgebraK::left_mul_matrix(const KElem& a) const {
  const std::size_t d = dim();
  Mat m(*field_, d, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, mul(a, basis_vec(j)));
  return m;
}

Mat AlgebraK::right_mul_matrix(const KElem& a) const {
  const std::size_t d = dim();
  Mat m(*field_, d, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, mul(basis_vec(j), a));
  return m;
}

bool AlgebraK::is_commutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (mul(basis_vec(i), basis_vec(j)) != mul(basis_vec(j), basis_vec(i))) return false;
  return true;
}

std::string AlgebraK::format(const KElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = a[i].to_string();
    if (a[i].is_one()) {
      os << basis_[i];
    } else {
      bool compound = c.find_first_of("+-", 1) != std::string::npos;
      os << (compound ? "(" + c + ")" : c) << "*" << basis_[i];
    }
  }
  return first ? "0" : os.str();
}

CheckReport algebra_validate(const AlgebraK& K) {
  CheckReport rep;
  const std::size_t d = K.dim();
  for (std::size_t i = 0; i < d && rep.ok; ++i) {
    for (std::size_t j = 0; j < d && rep.ok; ++j) {
      KElem eij = K.mul(K.basis_vec(i), K.basis_vec(j));
      for (std::size_t k = 0; k < d && rep.ok; ++k) {
        KElem ek = K.basis_vec(k);
        if (K.mul(eij, ek) != K.mul(K.basis_vec(i), K.mul(K.basis_vec(j), ek)))
          rep.fail("associativity fails at triple (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < d && rep.ok; ++i) {
    KElem ei = K.basis_vec(i);
    if (K.mul(K.unit(), ei) != ei || K.mul(ei, K.unit()) != ei)
      rep.fail("unit law fails at basis element " + std::to_string(i + 1));
  }
  return rep;
}

Mat center(const AlgebraK& K) {
  const std::size_t d = K.dim();
  Mat stacked(K.field(), 0, d);
  for (std::size_t i = 0; i < d; ++i) {
    KElem ei = K.basis_vec(i);
    stacked = Mat::vstack(stacked, K.right_mul_matrix(ei) - K.left_mul_matrix(ei));
  }
  return kernel_basis(stacked);
}

// ---------------------------------------------------------------- Endo

Endo::Endo(Mat matrix) : matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("endomorphism matrix must be square");
  automorphism_ = rank(matrix_) == matrix_.rows();
  cache_->powers.push_back(Mat::identity(matrix_.field(), matrix_.rows()));
  cache_->powers.push_back(matrix_);
}

Endo Endo::identity(const AlgebraK& K) { return Endo(Mat::identity(K.field(), K.dim())); }

bool Endo::is_identity() const {
  return matrix_ == Mat::identity(matrix_.field(), matrix_.rows());
}

const Mat& Endo::power(long r) const {
  if (r < 0) throw InputError("negative power of an endomorphism");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& p = cache_->powers;
  while (p.size() <= static_cast<std::size_t>(r)) p.push_back(matrix_ * p.back());
  return p[static_cast<std::size_t>(r)];
}

std::optional<long> Endo::order(long max_order) const { return order_of_power(1, max_order); }

std::optional<long> Endo::order_of_power(long step, long max_order) const {
  const Mat id = Mat::identity(matrix_.field(), matrix_.rows());
  if (step == 0) return 1;
  for (long r = 1; r <= max_order; ++r)
    if (power(r * step) == id) return r;
  return std::nullopt;
}

CheckReport endo_validate(const AlgebraK& K, const Endo& alpha) {
  CheckReport rep;
  const std::size_t d = K.dim();
  if (alpha.matrix().rows() != d) {
    rep.fail("endomorphism matrix has size " + std::to_string(alpha.matrix().rows()) +
             ", algebra has dimension " + std::to_string(d));
    return rep;
  }
  if (alpha.apply(K.unit()) != K.unit()) rep.fail("alpha(1) != 1");
  std::vector<KElem> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(alpha.apply(K.basis_vec(i)));
  for (std::size_t i = 0; i < d && rep.ok; ++i)
    for (std::size_t j = 0; j < d && rep.ok; ++j)
      if (alpha.apply(K.mul(K.basis_vec(i), K.basis_vec(j))) != K.mul(images[i], images[j]))
        rep.fail("alpha is not multiplicative at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")");
  return rep;
}

// ---------------------------------------------------------------- groups

GroupData GroupData::from_table(std::vector<std::string> labels,
                                std::vector<std::vector<std::size_t>> table) {
  GroupData G;
  G.order = table.size();
  if (G.order == 0) throw InputError("empty group table");
  if (labels.empty())
    for (std::size_t i = 0; i < G.order; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != G.order) throw InputError("group labels do not match the table size");
  for (const auto& row : table) {
    if (row.size() != G.order) throw InputError("group table is not square");
    for (auto v : row)
      if (v >= G.order) throw InputError("group table entry out of range");
  }
  G.labels = std::move(labels);
  G.table = std::move(table);
  const std::size_t n = G.order;
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = G.table[e][g] == g && G.table[g][e] == g;
    if (ok) {
      G.identity = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity");
  G.inverse.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (G.table[g][h] == G.identity && G.table[h][g] == G.identity) G.inverse[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (G.inverse[g] == n) throw InputError("element " + G.labels[g] + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (G.table[G.table[a][b]][c] != G.table[a][G.table[b][c]])
          throw InputError("group table is not associative at (" + G.labels[a] + "," +
                           G.labels[b] + "," + G.labels[c] + ")");
  std::vector<bool> seen(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t c = G.conjugate(h, g);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    G.conj_classes.push_back(std::move(cls));
  }
  for (const auto& cls : G.conj_classes)
    if (cls.size() == 1) G.center.push_back(cls[0]);
  std::sort(G.center.begin(), G.center.end());
  return G;
}

GroupData GroupData::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t j = 0; j < n; ++j) {
    labels.push_back(j == 0 ? "1" : j == 1 ? "g" : "g^" + std::to_string(j));
    for (std::size_t k = 0; k < n; ++k) table[j][k] = (j + k) % n;
  }
  return from_table(std::move(labels), std::move(table));
}

GroupData GroupData::gh4(std::size_t u) {
  if (u == 0) throw InputError("gh4 parameter u must be positive");
  const std::size_t n = 4 * u;
  auto idx = [u](std::size_t j, std::size_t l) { return l * u + j; };
  std::vector<std::string> labels(n);
  for (std::size_t l = 0; l < 4; ++l) {
    for (std::size_t j = 0; j < u; ++j) {
      std::string s;
      if (j == 1) s = "g";
      else if (j > 1) s = "g^" + std::to_string(j);
      if (l == 1) s += "h";
      else if (l > 1) s += "h^" + std::to_string(l);
      labels[idx(j, l)] = s.empty() ? "1" : s;
    }
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t j = 0; j < u; ++j)
      for (std::size_t l2 = 0; l2 < 4; ++l2)
        for (std::size_t j2 = 0; j2 < u; ++j2) {
          // g^j h^l g^j2 h^l2 = g^(j + (-1)^l j2) h^(l + l2)
          std::size_t jj = (l % 2 == 0) ? (j + j2) % u : (j + u - j2) % u;
          table[idx(j, l)][idx(j2, l2)] = idx(jj, (l + l2) % 4);
        }
  GroupData G = from_table(std::move(labels), std::move(table));
  const std::size_t g = idx(u > 1 ? 1 : 0, 0), h = idx(0, 1);
  if (G.power(g, static_cast<long>(u)) != G.identity || G.power(h, 4) != G.identity ||
      G.mul(h, g) != G.mul(G.inverse[g], h))
    throw MathError("gh4 presentation relations fail");
  return G;
}

std::size_t GroupData::power(std::size_t g, long e) const {
  std::size_t base = e < 0 ? inverse[g] : g;
  std::size_t acc = identity;
  for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = mul(acc, base);
  return acc;
}

std::size_t GroupData::element_order(std::size_t g) const {
  std::size_t acc = g, k = 1;
  while (acc != identity) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

std::size_t GroupData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw InputError("unknown group element '" + label + "'");
}

std::vector<std::size_t> GroupData::centralizer(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < order; ++h)
    if (mul(h, g) == mul(g, h)) out.push_back(h);
  return out;
}

std::size_t GroupData::class_of(std::size_t g) const {
  for (std::size_t c = 0; c < conj_classes.size(); ++c)
    if (std::binary_search(conj_classes[c].begin(), conj_classes[c].end(), g)) return c;
  throw InputError("element not in any class");
}

std::vector<std::size_t> GroupData::character_kernel() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < order; ++g)
    if (character.at(g).is_one()) out.push_back(g);
  return out;
}

void GroupData::set_character(std::vector<Scalar> values) {
  if (values.size() != order) throw InputError("character has wrong number of values");
  if (!values[identity].is_one()) throw InputError("character must send 1 to 1");
  for (std::size_t a = 0; a < order; ++a) {
    if (values[a].is_zero()) throw InputError("character value zero at " + labels[a]);
    for (std::size_t b = 0; b < order; ++b)
      if (values[mul(a, b)] != values[a] * values[b])
        throw InputError("character is not multiplicative at (" + labels[a] + "," + labels[b] +
                         ")");
  }
  character = std::move(values);
}

std::vector<Scalar> cyclic_character(const GroupData& G, const Scalar& chi_g) {
  std::vector<Scalar> v(G.order);
  for (std::size_t j = 0; j < G.order; ++j) v[j] = chi_g.pow(static_cast<long>(j));
  return v;
}

std::vector<Scalar> gh4_character(const GroupData& G, std::size_t u, const Scalar& chi_g,
                                  const Scalar& chi_h) {
  std::vector<Scalar> v(G.order);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t j = 0; j < u; ++j)
      v[l * u + j] = chi_g.pow(static_cast<long>(j)) * chi_h.pow(static_cast<long>(l));
  return v;
}

AlgebraK group_algebra(const GroupData& G, const Field& F) {
  std::vector<AlgebraK::Entry> entries;
  for (std::size_t a = 0; a < G.order; ++a)
    for (std::size_t b = 0; b < G.order; ++b) entries.push_back({a, b, G.mul(a, b), F.one()});
  Vec unit = zero_vec(F, G.order);
  unit[G.identity] = F.one();
  return AlgebraK(F, G.labels, unit, entries);
}

Endo endo_from_character(const GroupData& G) {
  if (!G.has_character()) throw InputError("group has no character attached");
  const Field& F = *G.character[0].field();
  Mat m(F, G.order, G.order);
  for (std::size_t g = 0; g < G.order; ++g) {
    if (G.character[g].is_zero()) throw InputError("character value zero at " + G.labels[g]);
    m(g, g) = G.character[g];
  }
  return Endo(std::move(m));
}

std::vector<KElem> class_sums(const GroupData& G, const Field& F) {
  std::vector<KElem> out;
  for (const auto& cls : G.conj_classes) {
    KElem v = zero_vec(F, G.order);
    for (auto g : cls) v[g] = F.one();
    out.push_back(std::move(v));
  }
  return out;
}

std::pair<AlgebraK, Endo> quaternion_algebra(const Field& F, const QuaternionData& q) {
  const Scalar one = F.one();
  auto sq = [](const Scalar& s) { return s * s; };
  if (sq(q.cos) + sq(q.sin) != one) throw InputError("cos^2 + sin^2 != 1");
  if (sq(q.cos_half) + sq(q.sin_half) != one) throw InputError("half-angle cos^2 + sin^2 != 1");
  if (q.cos != sq(q.cos_half) - sq(q.sin_half) || q.sin != F.from_int(2) * q.cos_half * q.sin_half)
    throw InputError("angle and half-angle data are inconsistent");
  // Basis 0 = 1, 1 = i, 2 = j, 3 = k.
  const Scalar m1 = -one;
  std::vector<AlgebraK::Entry> e;
  for (std::size_t a = 0; a < 4; ++a) {
    e.push_back({0, a, a, one});
    if (a) e.push_back({a, 0, a, one});
  }
  e.push_back({1, 1, 0, m1});
  e.push_back({2, 2, 0, m1});
  e.push_back({3, 3, 0, m1});
  e.push_back({1, 2, 3, one});
  e.push_back({2, 1, 3, m1});
  e.push_back({2, 3, 1, one});
  e.push_back({3, 2, 1, m1});
  e.push_back({3, 1, 2, one});
  e.push_back({1, 3, 2, m1});
  Vec unit{one, F.zero(), F.zero(), F.zero()};
  AlgebraK K(F, {"1", "i", "j", "k"}, unit, e);
  Mat a(F, 4, 4);
  a(0, 0) = one;
  a(1, 1) = q.cos;
  a(2, 1) = q.sin;
  a(1, 2) = -q.sin;
  a(2, 2) = q.cos;
  a(3, 3) = one;
  return {std::move(K), Endo(std::move(a))};
}

}  // namespace monogen
