#include "hitchin/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace hitchin {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

std::string SimpleComponent::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::string to_string(LatticeSpec::Kind kind) {
  switch (kind) {
    case LatticeSpec::Kind::simply_connected: return "sc";
    case LatticeSpec::Kind::adjoint: return "adjoint";
    case LatticeSpec::Kind::custom: return "custom";
  }
  return "?";
}

int CartanType::semisimple_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string CartanType::to_string() const {
  if (components.empty()) return "T";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += '+';
    out += components[i].name();
  }
  return out;
}

CartanType CartanType::parse(std::string_view text, int central_rank) {
  CartanType type;
  type.central_rank = central_rank;
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
  if (cleaned.empty() || cleaned == "T" || cleaned == "torus") return normalize(type);

  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t end = std::min(cleaned.find('+', pos), cleaned.size());
    const std::string_view token = std::string_view(cleaned).substr(pos, end - pos);
    if (token.size() < 2) throw Error(ErrorCode::invalid_type, "unknown type string '" + std::string(text) + "'");
    Family family;
    switch (std::toupper(static_cast<unsigned char>(token[0]))) {
      case 'A': family = Family::A; break;
      case 'B': family = Family::B; break;
      case 'C': family = Family::C; break;
      case 'D': family = Family::D; break;
      case 'E': family = Family::E; break;
      case 'F': family = Family::F; break;
      case 'G': family = Family::G; break;
      default: throw Error(ErrorCode::invalid_type, "unknown family in type string '" + std::string(token) + "'");
    }
    int rank = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), rank);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::invalid_type, "malformed rank in type string '" + std::string(token) + "'");
    type.components.push_back({family, rank});
    pos = end + 1;
  }
  return normalize(type);
}

CartanType normalize(CartanType type) {
  if (type.central_rank < 0) throw Error(ErrorCode::invalid_type, "central rank must be non-negative");
  std::vector<SimpleComponent> out;
  for (const auto& c : type.components) {
    const auto bad = [&] { return Error(ErrorCode::invalid_type, "invalid Dynkin type " + c.name()); };
    if (c.rank < 1) throw bad();
    switch (c.family) {
      case Family::A: out.push_back(c); break;
      case Family::B:
        out.push_back(c.rank == 1 ? SimpleComponent{Family::A, 1} : c);
        break;
      case Family::C:
        if (c.rank == 1) out.push_back({Family::A, 1});
        else if (c.rank == 2) out.push_back({Family::B, 2});
        else out.push_back(c);
        break;
      case Family::D:
        if (c.rank == 1) throw bad();
        if (c.rank == 2) {
          out.push_back({Family::A, 1});
          out.push_back({Family::A, 1});
        } else if (c.rank == 3) {
          out.push_back({Family::A, 3});
        } else {
          out.push_back(c);
        }
        break;
      case Family::E:
        if (c.rank < 6 || c.rank > 8) throw bad();
        out.push_back(c);
        break;
      case Family::F:
        if (c.rank != 4) throw bad();
        out.push_back(c);
        break;
      case Family::G:
        if (c.rank != 2) throw bad();
        out.push_back(c);
        break;
    }
  }
  type.components = std::move(out);
  if (type.components.empty() && type.central_rank < 1)
    throw Error(ErrorCode::invalid_type, "a group with no simple components needs central rank >= 1");
  return type;
}

Int weyl_order(const SimpleComponent& c) {
  const auto factorial = [](Int n) {
    Int f = 1;
    for (Int k = 2; k <= n; ++k) f = checked_mul(f, k);
    return f;
  };
  const Int l = c.rank;
  switch (c.family) {
    case Family::A: return factorial(l + 1);
    case Family::B:
    case Family::C: return checked_mul(Int{1} << l, factorial(l));
    case Family::D: return checked_mul(Int{1} << (l - 1), factorial(l));
    case Family::E: return l == 6 ? 51840 : l == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 1;
}

IntMatrix component_cartan_matrix(const SimpleComponent& c) {
  const std::size_t l = static_cast<std::size_t>(c.rank);
  IntMatrix m = IntMatrix::identity(l);
  for (std::size_t i = 0; i < l; ++i) m(i, i) = 2;
  const auto edge = [&m](std::size_t i, std::size_t j) { m(i, j) = m(j, i) = -1; };
  switch (c.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
      m(l - 2, l - 1) = -2;  // long, short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < l; ++i) edge(i, i + 1);
      m(l - 1, l - 2) = -2;
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < l; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case Family::E: {
      const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      for (auto [i, j] : edges)
        if (j < l) edge(i, j);
      break;
    }
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      m(1, 2) = -2;
      break;
    case Family::G:
      edge(0, 1);
      m(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return m;
}

namespace {

// (alpha_i, alpha_i) with long roots normalized to 2.
std::vector<Rational> simple_norms(const SimpleComponent& c) {
  std::vector<Rational> n(static_cast<std::size_t>(c.rank), Rational(2));
  switch (c.family) {
    case Family::B: n.back() = 1; break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n.size(); ++i) n[i] = 1;
      break;
    case Family::F: n[2] = n[3] = 1; break;
    case Family::G: n[0] = Rational(2, 3); break;
    default: break;
  }
  return n;
}

struct ComponentRoots {
  std::vector<IntVector> positive;  // simple-root coordinates
  IntMatrix cartan;
  std::vector<Rational> simple_norm;
};

ComponentRoots component_roots(const SimpleComponent& c) {
  ComponentRoots out;
  out.cartan = component_cartan_matrix(c);
  out.simple_norm = simple_norms(c);
  const std::size_t l = out.cartan.rows();

  std::unordered_set<IntVector, IntVectorHash> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      Int p = 0;  // <beta, alpha_i^vee>
      for (std::size_t k = 0; k < l; ++k) p += beta[k] * out.cartan(k, i);
      IntVector image = beta;
      image[i] -= p;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; })) out.positive.push_back(v);
  std::sort(out.positive.begin(), out.positive.end(), [](const IntVector& a, const IntVector& b) {
    const Int ha = std::accumulate(a.begin(), a.end(), Int{0});
    const Int hb = std::accumulate(b.begin(), b.end(), Int{0});
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

Rational to_integral_check(const Rational& r, const std::string& what) {
  if (r.denominator() != 1) throw Error(ErrorCode::invalid_lattice, what);
  return r;
}

}  // namespace

const IntVector& RootDatum::root(RootIndex i) const {
  if (i >= roots_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return roots_[i];
}

const IntVector& RootDatum::coroot(RootIndex i) const {
  if (i >= coroots_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return coroots_[i];
}

const IntVector& RootDatum::simple_coordinates(RootIndex i) const {
  if (i >= simple_coords_.size())
    throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return simple_coords_[i];
}

std::size_t RootDatum::component_of(RootIndex i) const {
  if (i >= component_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return component_[i];
}

Rational RootDatum::norm(RootIndex i) const {
  if (i >= norms_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return norms_[i];
}

bool RootDatum::is_long(RootIndex i) const {
  if (i >= long_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return long_[i];
}

RootIndex RootDatum::negative(RootIndex i) const {
  const std::size_t half = num_positive_roots();
  if (i >= roots_.size()) throw Error(ErrorCode::index_out_of_range, "root index " + std::to_string(i) + " out of range");
  return i < half ? i + half : i - half;
}

std::vector<RootIndex> RootDatum::simple_roots_of(std::size_t component) const {
  std::vector<RootIndex> out;
  for (RootIndex s : simple_)
    if (component_[s] == component) out.push_back(s);
  return out;
}

std::optional<RootIndex> RootDatum::find_root(const IntVector& x) const {
  auto it = lookup_.find(x);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Rational RootDatum::form(std::span<const Int> x, std::span<const Int> y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += form_[i][j] * x[i] * y[j];
  }
  return s;
}

IntMatrix RootDatum::cartan_matrix() const {
  IntMatrix m(simple_.size(), simple_.size());
  for (std::size_t i = 0; i < simple_.size(); ++i)
    for (std::size_t j = 0; j < simple_.size(); ++j) m(i, j) = dot(roots_[simple_[i]], coroots_[simple_[j]]);
  return m;
}

RootDatum build_root_datum(const CartanType& raw_type, const LatticeSpec& lattice) {
  RootDatum d;
  d.type_ = normalize(raw_type);
  d.lattice_ = lattice;
  const std::size_t ss = static_cast<std::size_t>(d.type_.semisimple_rank());
  const std::size_t n = ss + static_cast<std::size_t>(d.type_.central_rank);
  d.rank_ = static_cast<int>(n);

  // Weight-lattice data: roots in fundamental-weight coordinates, coroots in
  // simple-coroot coordinates, both embedded block-diagonally.
  std::vector<IntVector> pos_weight, pos_coroot, pos_simple;
  std::vector<std::size_t> pos_component;
  std::vector<Rational> pos_norm;
  IntMatrix cartan_all(n, n);  // block-diagonal Cartan, identity on the central block
  RationalMatrix simple_gram(n, std::vector<Rational>(n, Rational(0)));
  std::size_t offset = 0;
  for (std::size_t ci = 0; ci < d.type_.components.size(); ++ci) {
    const ComponentRoots cr = component_roots(d.type_.components[ci]);
    const std::size_t l = cr.cartan.rows();
    d.simple_offset_.push_back(offset);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        cartan_all(offset + i, offset + j) = cr.cartan(i, j);
        simple_gram[offset + i][offset + j] = cr.simple_norm[j] * cr.cartan(i, j) / 2;
      }
    for (const IntVector& c : cr.positive) {
      Rational nrm = 0;
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) nrm += cr.simple_norm[j] * cr.cartan(i, j) / 2 * c[i] * c[j];
      IntVector weight(n, 0), co(n, 0), simple(ss, 0);
      for (std::size_t j = 0; j < l; ++j) {
        Int x = 0;
        for (std::size_t k = 0; k < l; ++k) x += c[k] * cr.cartan(k, j);
        weight[offset + j] = x;
        const Rational dk = cr.simple_norm[j] * c[j] / nrm;
        if (dk.denominator() != 1) throw Error(ErrorCode::inconsistent_input, "non-integral coroot coordinate");
        co[offset + j] = dk.numerator();
        simple[offset + j] = c[j];
      }
      pos_weight.push_back(std::move(weight));
      pos_coroot.push_back(std::move(co));
      pos_simple.push_back(std::move(simple));
      pos_component.push_back(ci);
      pos_norm.push_back(nrm);
    }
    offset += l;
  }
  for (std::size_t i = ss; i < n; ++i) {
    cartan_all(i, i) = 1;
    simple_gram[i][i] = 1;
  }

  // Basis of X(T) in weight+central coordinates.
  RationalMatrix basis;
  switch (lattice.kind) {
    case LatticeSpec::Kind::simply_connected: basis = to_rational(IntMatrix::identity(n)); break;
    case LatticeSpec::Kind::adjoint: basis = to_rational(cartan_all); break;
    case LatticeSpec::Kind::custom:
      basis = lattice.custom_basis;
      if (basis.size() != n || std::any_of(basis.begin(), basis.end(), [n](const auto& r) { return r.size() != n; }))
        throw Error(ErrorCode::invalid_lattice,
                    "custom basis must be " + std::to_string(n) + "x" + std::to_string(n) + " for type " +
                        d.type_.to_string() + " with central rank " + std::to_string(d.type_.central_rank));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          to_integral_check(basis[i][j], "custom basis row " + std::to_string(i) + " is not inside the weight lattice");
      break;
  }
  const auto basis_inv = inverse(basis);
  if (!basis_inv) throw Error(ErrorCode::invalid_lattice, "custom basis is singular");

  const auto to_x = [&](const IntVector& weight) {
    IntVector x(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (weight[k] != 0) s += (*basis_inv)[k][j] * weight[k];
      x[j] = to_integral_check(s, "custom basis does not contain the root lattice").numerator();
    }
    return x;
  };
  const auto to_y = [&](const IntVector& co) {
    IntVector y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += basis[i][k] * co[k];
      y[i] = s.numerator();
    }
    return y;
  };

  const std::size_t half = pos_weight.size();
  for (int sign : {1, -1}) {
    for (std::size_t i = 0; i < half; ++i) {
      IntVector x = to_x(pos_weight[i]);
      IntVector y = to_y(pos_coroot[i]);
      IntVector s = pos_simple[i];
      if (sign < 0) {
        for (auto* v : {&x, &y, &s})
          for (Int& e : *v) e = -e;
      }
      d.lookup_.emplace(x, d.roots_.size());
      d.roots_.push_back(std::move(x));
      d.coroots_.push_back(std::move(y));
      d.simple_coords_.push_back(std::move(s));
      d.component_.push_back(pos_component[i]);
      d.norms_.push_back(pos_norm[i]);
    }
  }
  for (const Rational& nrm : d.norms_) d.long_.push_back(nrm == 2);
  for (RootIndex i = 0; i < half; ++i) {
    d.positive_.push_back(i);
    const auto& c = d.simple_coords_[i];
    if (std::accumulate(c.begin(), c.end(), Int{0}) == 1) d.simple_.push_back(i);
  }
  std::sort(d.simple_.begin(), d.simple_.end(), [&d](RootIndex a, RootIndex b) {
    return std::find(d.simple_coords_[a].begin(), d.simple_coords_[a].end(), 1) - d.simple_coords_[a].begin() <
           std::find(d.simple_coords_[b].begin(), d.simple_coords_[b].end(), 1) - d.simple_coords_[b].begin();
  });

  d.pairing_ = IntMatrix::identity(n);

  // Invariant form: Gram of fundamental weights is C^{-1} S C^{-T}, then change to the X(T) basis.
  const auto cartan_inv = inverse(to_rational(cartan_all));
  RationalMatrix weight_gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if ((*cartan_inv)[i][a] != 0 && (*cartan_inv)[j][b] != 0)
            weight_gram[i][j] += (*cartan_inv)[i][a] * simple_gram[a][b] * (*cartan_inv)[j][b];
  d.form_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (basis[i][a] != 0 && basis[j][b] != 0) d.form_[i][j] += basis[i][a] * weight_gram[a][b] * basis[j][b];
  return d;
}

IntVector coroot(const RootDatum& datum, RootIndex beta) { return datum.coroot(beta); }

std::vector<Int> derived_fundamental_group(const RootDatum& datum) {
  if (datum.num_roots() == 0) return {};
  std::vector<IntVector> rows;
  for (RootIndex s : datum.simple_roots()) rows.push_back(datum.coroot(s));
  return smith_invariants(IntMatrix::from_rows(rows));
}

bool derived_group_is_simply_connected(const RootDatum& datum) {
  const auto factors = derived_fundamental_group(datum);
  return std::all_of(factors.begin(), factors.end(), [](Int f) { return f == 1; });
}

bool root_admits_unit_pairing(const RootDatum& datum, RootIndex alpha) {
  return gcd_of(datum.coroot(alpha)) == 1;
}

}  // namespace hitchin
