#include "zetaforge/detcomplex.hpp"

#include <algorithm>
#include <set>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

void require_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::MalformedComplex,
                what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Integer parse_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) return Integer(v.get<std::string>());
  throw Error(ErrorCode::MalformedComplex, "matrix entries must be integers");
}

int parse_degree(const std::string& key) {
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) {
    throw Error(ErrorCode::MalformedComplex, "degree key '" + key + "' is not a decimal integer");
  }
  return d;
}

// Product of the nonzero elementary divisors, and the rank, of d.
std::pair<Integer, std::size_t> elementary_divisor_product(const IntMatrix& d) {
  if (d.empty()) return {Integer(1), 0};
  const auto snf = smith_normal_form(d);
  Integer prod = 1;
  std::size_t rank = 0;
  for (const auto& x : snf.diagonal()) {
    if (x == 0) continue;
    prod *= x;
    ++rank;
  }
  return {prod, rank};
}

}  // namespace

BoundedFreeComplex::BoundedFreeComplex(std::map<int, std::size_t> ranks,
                                       std::map<int, IntMatrix> differentials) {
  for (const auto& [deg, r] : ranks)
    if (r > 0) ranks_[deg] = r;
  for (auto& [deg, d] : differentials) {
    require_shape(d, rank(deg + 1), rank(deg), "differential d^" + std::to_string(deg));
    if (!d.empty() && !d.is_zero()) differentials_[deg] = std::move(d);
  }
  for (const auto& [deg, d] : differentials_) {
    auto next = differentials_.find(deg + 1);
    if (next == differentials_.end()) continue;
    if (!(next->second * d).is_zero()) {
      throw Error(ErrorCode::MalformedComplex,
                  "d^" + std::to_string(deg + 1) + " o d^" + std::to_string(deg) + " != 0");
    }
  }
}

int BoundedFreeComplex::lo() const { return ranks_.empty() ? 1 : ranks_.begin()->first; }
int BoundedFreeComplex::hi() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

std::size_t BoundedFreeComplex::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

IntMatrix BoundedFreeComplex::differential(int degree) const {
  auto it = differentials_.find(degree);
  if (it != differentials_.end()) return it->second;
  return IntMatrix(rank(degree + 1), rank(degree));
}

BoundedFreeComplex BoundedFreeComplex::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ranks")) {
    throw Error(ErrorCode::MalformedComplex, "complex file needs a \"ranks\" object");
  }
  std::map<int, std::size_t> ranks;
  for (const auto& [key, value] : j.at("ranks").items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw Error(ErrorCode::MalformedComplex, "rank at degree " + key + " must be a nonnegative integer");
    }
    ranks[parse_degree(key)] = value.get<std::size_t>();
  }
  auto rank_of = [&](int d) {
    auto it = ranks.find(d);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  std::map<int, IntMatrix> diffs;
  if (j.contains("differentials")) {
    for (const auto& [key, value] : j.at("differentials").items()) {
      const int deg = parse_degree(key);
      if (!value.is_array()) throw Error(ErrorCode::MalformedComplex, "differential " + key + " must be a list of rows");
      std::vector<std::vector<Integer>> rows;
      for (const auto& row : value) {
        if (!row.is_array()) throw Error(ErrorCode::MalformedComplex, "differential " + key + " must be a list of rows");
        std::vector<Integer> r;
        for (const auto& e : row) r.push_back(parse_integer(e));
        rows.push_back(std::move(r));
      }
      const std::size_t cols = rows.empty() ? rank_of(deg) : rows.front().size();
      try {
        diffs[deg] = IntMatrix::from_rows(rows, cols);
      } catch (const Error& e) {
        throw Error(ErrorCode::MalformedComplex, "differential " + key + ": " + e.what());
      }
    }
  }
  return BoundedFreeComplex(std::move(ranks), std::move(diffs));
}

nlohmann::json BoundedFreeComplex::to_json() const {
  nlohmann::json j;
  j["ranks"] = nlohmann::json::object();
  for (const auto& [deg, r] : ranks_) j["ranks"][std::to_string(deg)] = r;
  j["differentials"] = nlohmann::json::object();
  for (const auto& [deg, d] : differentials_) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t k = 0; k < d.cols(); ++k) {
        if (d(i, k).fits_slong_p()) row.push_back(d(i, k).get_si());
        else row.push_back(d(i, k).get_str());
      }
      rows.push_back(std::move(row));
    }
    j["differentials"][std::to_string(deg)] = std::move(rows);
  }
  return j;
}

FinGenAbGroup cohomology(const BoundedFreeComplex& c, int degree) {
  const std::size_t n = c.rank(degree);
  if (n == 0) return {};
  const IntMatrix out = c.differential(degree);
  const IntMatrix in = c.differential(degree - 1);

  // With d^i = U S V, ker d^i is spanned by the last n - r columns of V^{-1};
  // coordinates of a cycle y in that basis are the last n - r entries of V y.
  std::size_t r = 0;
  IntMatrix v = IntMatrix::identity(n);
  if (out.rows() > 0) {
    auto snf = smith_normal_form(out);
    r = snf.rank();
    v = std::move(snf.V);
  }
  const std::size_t kernel_rank = n - r;
  if (kernel_rank == 0) return {};
  const IntMatrix coords = (v * in).row_block(r, kernel_rank);
  return cokernel(coords);
}

EulerCharacteristics euler_characteristics(const BoundedFreeComplex& c) {
  EulerCharacteristics e;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const long rk = static_cast<long>(cohomology(c, i).rank());
    const long sign = (i % 2 == 0) ? 1 : -1;
    e.chi += sign * rk;
    e.secondary += sign * i * rk;
  }
  return e;
}

long rank_euler_characteristic(const BoundedFreeComplex& c) {
  long chi = 0;
  for (const auto& [deg, r] : c.ranks()) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(r);
  return chi;
}

Rational multiplicative_euler_char(const BoundedFreeComplex& c) {
  Rational m = 1;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const auto h = cohomology(c, i);
    if (!h.is_finite()) {
      throw Error(ErrorCode::InfiniteCohomology,
                  "H^" + std::to_string(i) + " = " + h.to_string() + " is infinite");
    }
    const Integer order = group_order(h);
    if (i % 2 == 0) m *= order;
    else m /= order;
  }
  m.canonicalize();
  return m;
}

GradedLine determinant(const BoundedFreeComplex& c) {
  GradedLine line;
  line.grade = rank_euler_characteristic(c);
  try {
    line.ideal = 1 / multiplicative_euler_char(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteCohomology) throw;
  }
  return line;
}

GradedLine determinant_termwise(const BoundedFreeComplex& c) {
  GradedLine line;
  line.grade = rank_euler_characteristic(c);
  if (c.is_zero()) {
    line.ideal = Rational(1);
    return line;
  }
  std::map<int, std::size_t> diff_rank;
  Rational m = 1;
  for (int i = c.lo() - 1; i <= c.hi(); ++i) {
    auto [prod, rank] = elementary_divisor_product(c.differential(i));
    diff_rank[i] = rank;
    // D(d^i) is the order of the torsion in degree i + 1.
    if ((i + 1) % 2 == 0) m *= prod;
    else m /= prod;
  }
  for (int i = c.lo(); i <= c.hi(); ++i) {
    if (c.rank(i) != diff_rank[i] + diff_rank[i - 1]) return line;
  }
  m.canonicalize();
  line.ideal = 1 / m;
  return line;
}

IntMatrix ChainMap::component(int degree) const {
  auto it = components.find(degree);
  if (it != components.end()) return it->second;
  return IntMatrix(target.rank(degree), source.rank(degree));
}

BoundedFreeComplex mapping_cone(const ChainMap& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  for (const auto& [deg, m] : f.components) {
    if (m.rows() != b.rank(deg) || m.cols() != a.rank(deg)) {
      throw Error(ErrorCode::NonChainMap, "component f^" + std::to_string(deg) + " has the wrong shape");
    }
  }
  std::set<int> degrees;
  for (const auto& [deg, r] : a.ranks()) degrees.insert(deg);
  for (const auto& [deg, r] : b.ranks()) degrees.insert(deg);
  for (int deg : degrees) {
    const IntMatrix lhs = f.component(deg + 1) * a.differential(deg);
    const IntMatrix rhs = b.differential(deg) * f.component(deg);
    if (!(lhs == rhs)) {
      throw Error(ErrorCode::NonChainMap, "f does not commute with d in degree " + std::to_string(deg));
    }
  }

  if (a.is_zero() && b.is_zero()) return {};
  const int lo = std::min(b.is_zero() ? a.lo() - 1 : b.lo(), a.is_zero() ? b.lo() : a.lo() - 1);
  const int hi = std::max(b.is_zero() ? a.hi() - 1 : b.hi(), a.is_zero() ? b.hi() : a.hi() - 1);

  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int i = lo; i <= hi; ++i) ranks[i] = b.rank(i) + a.rank(i + 1);
  for (int i = lo; i < hi; ++i) {
    const std::size_t rb0 = b.rank(i), ra1 = a.rank(i + 1);
    const std::size_t rb1 = b.rank(i + 1), ra2 = a.rank(i + 2);
    IntMatrix d(rb1 + ra2, rb0 + ra1);
    const IntMatrix db = b.differential(i);
    const IntMatrix fa = f.component(i + 1);
    const IntMatrix da = a.differential(i + 1);
    for (std::size_t r = 0; r < rb1; ++r) {
      for (std::size_t k = 0; k < rb0; ++k) d(r, k) = db(r, k);
      for (std::size_t k = 0; k < ra1; ++k) d(r, rb0 + k) = fa(r, k);
    }
    for (std::size_t r = 0; r < ra2; ++r)
      for (std::size_t k = 0; k < ra1; ++k) d(rb1 + r, rb0 + k) = -da(r, k);
    diffs[i] = std::move(d);
  }
  return BoundedFreeComplex(std::move(ranks), std::move(diffs));
}

BoundedFreeComplex shift(const BoundedFreeComplex& c, int k) {
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (const auto& [deg, r] : c.ranks()) ranks[deg - k] = r;
  for (const auto& [deg, d] : c.differentials()) diffs[deg - k] = (k % 2 == 0) ? d : -d;
  return BoundedFreeComplex(std::move(ranks), std::move(diffs));
}

BoundedFreeComplex direct_sum(const BoundedFreeComplex& a, const BoundedFreeComplex& b) {
  std::set<int> degrees;
  for (const auto& [deg, r] : a.ranks()) degrees.insert(deg);
  for (const auto& [deg, r] : b.ranks()) degrees.insert(deg);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int deg : degrees) ranks[deg] = a.rank(deg) + b.rank(deg);
  for (int deg : degrees) {
    const IntMatrix da = a.differential(deg);
    const IntMatrix db = b.differential(deg);
    IntMatrix d(da.rows() + db.rows(), da.cols() + db.cols());
    for (std::size_t r = 0; r < da.rows(); ++r)
      for (std::size_t k = 0; k < da.cols(); ++k) d(r, k) = da(r, k);
    for (std::size_t r = 0; r < db.rows(); ++r)
      for (std::size_t k = 0; k < db.cols(); ++k) d(da.rows() + r, da.cols() + k) = db(r, k);
    diffs[deg] = std::move(d);
  }
  return BoundedFreeComplex(std::move(ranks), std::move(diffs));
}

}  // namespace zetaforge
