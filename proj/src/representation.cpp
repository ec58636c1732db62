#include "hopf/representation.hpp"

#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

int positive_mod(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

int parse_sign(const std::string& tok) {
  if (tok == "+" || tok == "+1" || tok == "1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw std::invalid_argument("bad sign token in representation label: " + tok);
}

std::vector<std::string> split_label(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '_') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

int RepLabel::dim() const {
  switch (kind) {
    case RepKind::OneDimCyc:
    case RepKind::OneDimSigns:
      return 1;
    default:
      return 2;
  }
}

std::string RepLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case RepKind::OneDimCyc:
      os << "T_" << a << "_" << sign_str(b);
      break;
    case RepKind::TwoDimCyc:
      os << "pi_" << a << "_" << b;
      break;
    case RepKind::OneDimSigns:
      os << "T_" << sign_str(a) << "_" << sign_str(b) << "_" << sign_str(c);
      break;
    case RepKind::TwoDimIndex:
      os << "pi_" << a;
      break;
    case RepKind::TwoDimIndexSign:
      os << "pi_" << a << "_" << sign_str(b);
      break;
  }
  return os.str();
}

RepLabel RepLabel::parse(const std::string& text) {
  std::vector<std::string> parts = split_label(text);
  if (parts.size() < 2) throw std::invalid_argument("bad representation label: " + text);
  const std::string& head = parts[0];
  if (head == "T" && parts.size() == 3 && is_number(parts[1])) {
    return label_T_cyc(std::stoi(parts[1]), parse_sign(parts[2]));
  }
  if (head == "T" && parts.size() == 4) {
    return label_T_signs(parse_sign(parts[1]), parse_sign(parts[2]), parse_sign(parts[3]));
  }
  if (head == "pi" && parts.size() == 2 && is_number(parts[1])) {
    return label_pi_index(std::stoi(parts[1]));
  }
  if (head == "pi" && parts.size() == 3 && is_number(parts[1]) && is_number(parts[2])) {
    return label_pi_cyc(std::stoi(parts[1]), std::stoi(parts[2]));
  }
  if (head == "pi" && parts.size() == 3 && is_number(parts[1])) {
    return label_pi_index_sign(std::stoi(parts[1]), parse_sign(parts[2]));
  }
  throw std::invalid_argument("bad representation label: " + text);
}

RepLabel label_T_cyc(int k, int sign) { return RepLabel{RepKind::OneDimCyc, k, sign, 0}; }
RepLabel label_pi_cyc(int i, int j) { return RepLabel{RepKind::TwoDimCyc, i, j, 0}; }
RepLabel label_T_signs(int c1, int c2, int c3) {
  return RepLabel{RepKind::OneDimSigns, c1, c2, c3};
}
RepLabel label_pi_index(int i) { return RepLabel{RepKind::TwoDimIndex, i, 0, 0}; }
RepLabel label_pi_index_sign(int i, int eps) {
  return RepLabel{RepKind::TwoDimIndexSign, i, eps, 0};
}

CycMatrix Representation::word_image(const Word& w) const {
  CycMatrix M = CycMatrix::identity(static_cast<size_t>(dim()), H->conductor);
  for (int g : w) M = M * gen_images.at(static_cast<size_t>(g));
  return M;
}

CycMatrix Representation::of(const LinComb& x) const {
  CycMatrix M(static_cast<size_t>(dim()), static_cast<size_t>(dim()));
  for (const auto& [w, c] : x.terms) M = M + word_image(w).scaled(c);
  return M;
}

// ---------------------------------------------------------------------------
// Label canonicalization.

namespace {

bool family_is_a_type(Family f) {
  return f == Family::A4m || f == Family::DihedralTimesZ2;
}
bool family_is_b_type(Family f) {
  return f == Family::B4m || f == Family::Dihedral4m;
}
bool family_is_cyc_type(Family f) {
  return f == Family::H2n2 || f == Family::WreathZnS2;
}

void check_one_dim_signs(const HopfPresentation& H, const RepLabel& L) {
  if (L.a * L.a != 1 || L.b * L.b != 1 || L.c * L.c != 1)
    throw std::invalid_argument("label out of family: " + L.str());
  int m = H.param;
  int kappa = family_is_b_type(H.family) ? 1 : 0;
  int rot = (L.a * L.b > 0 || m % 2 == 0) ? 1 : -1;  // (ab)^m
  int required = kappa ? rot : 1;
  // one-dim characters must satisfy (s+s-)^m = a^kappa
  int lhs = rot;
  int rhs = kappa ? L.c : 1;
  (void)required;
  if (lhs != rhs)
    throw std::invalid_argument("label out of family: " + L.str());
}

}  // namespace

std::vector<RepLabel> canonical_label(const HopfPresentation& H, const RepLabel& L) {
  int n = H.param;
  switch (L.kind) {
    case RepKind::OneDimCyc: {
      if (!family_is_cyc_type(H.family))
        throw std::invalid_argument("label out of family: " + L.str());
      if (L.b * L.b != 1) throw std::invalid_argument("label out of family: " + L.str());
      return {label_T_cyc(positive_mod(L.a, n), L.b)};
    }
    case RepKind::TwoDimCyc: {
      if (!family_is_cyc_type(H.family))
        throw std::invalid_argument("label out of family: " + L.str());
      int i = positive_mod(L.a, n), j = positive_mod(L.b, n);
      if (i == j) return {label_T_cyc(i, 1), label_T_cyc(i, -1)};
      if (i > j) std::swap(i, j);
      return {label_pi_cyc(i, j)};
    }
    case RepKind::OneDimSigns: {
      if (!family_is_a_type(H.family) && !family_is_b_type(H.family))
        throw std::invalid_argument("label out of family: " + L.str());
      check_one_dim_signs(H, L);
      return {L};
    }
    case RepKind::TwoDimIndex: {
      if (!family_is_b_type(H.family))
        throw std::invalid_argument("label out of family: " + L.str());
      int m = n;
      int i = positive_mod(L.a, 2 * m);
      if (i > m) i = 2 * m - i;
      int pm = (m % 2 == 0) ? 1 : -1;  // (-1)^m
      if (i == 0) return {label_T_signs(1, 1, 1), label_T_signs(-1, -1, 1)};
      if (i == m) return {label_T_signs(1, -1, pm), label_T_signs(-1, 1, pm)};
      return {label_pi_index(i)};
    }
    case RepKind::TwoDimIndexSign: {
      if (!family_is_a_type(H.family))
        throw std::invalid_argument("label out of family: " + L.str());
      int m = n;
      if (L.b * L.b != 1) throw std::invalid_argument("label out of family: " + L.str());
      int i = positive_mod(L.a, m);
      if (2 * i > m) i = m - i;
      if (i == 0) return {label_T_signs(1, 1, L.b), label_T_signs(-1, -1, L.b)};
      if (2 * i == m) return {label_T_signs(1, -1, L.b), label_T_signs(-1, 1, L.b)};
      return {label_pi_index_sign(i, L.b)};
    }
  }
  throw std::logic_error("unreachable");
}

bool label_is_irreducible(const HopfPresentation& H, const RepLabel& L) {
  std::vector<RepLabel> c = canonical_label(H, L);
  return c.size() == 1 && c[0] == L;
}

// ---------------------------------------------------------------------------
// Representation builders.

namespace {

CycMatrix diag2(const CycNum& a, const CycNum& b) {
  CycMatrix M(2, 2);
  M.at(0, 0) = a;
  M.at(1, 1) = b;
  return M;
}

CycMatrix antidiag2(const CycNum& lower_left, const CycNum& upper_right) {
  // column-action convention: M e0 = lower_left * e1, M e1 = upper_right * e0
  CycMatrix M(2, 2);
  M.at(1, 0) = lower_left;
  M.at(0, 1) = upper_right;
  return M;
}

CycMatrix scalar1(const CycNum& v) {
  CycMatrix M(1, 1);
  M.at(0, 0) = v;
  return M;
}

// root of unity zeta_d^e expressed at the ambient conductor of H
CycNum amb_root(const HopfPresentation& H, unsigned long d, long e) {
  return CycNum::root_of_unity(d, e).lifted(H.conductor);
}

Representation build_cyc_rep(const HopfPtr& H, const RepLabel& L) {
  int n = H->param;
  bool hopf = (H->family == Family::H2n2);
  Representation rho;
  rho.H = H;
  rho.label = L;
  // q = zeta_n at the ambient conductor 2n
  auto q_pow = [&](long e) { return amb_root(*H, static_cast<unsigned long>(n), e); };
  if (L.kind == RepKind::OneDimCyc) {
    long k = L.a;
    CycNum zval;
    if (hopf) {
      // z -> sign * p^{k^2} with p = zeta_{2n}^{n+1}
      zval = CycNum::from_long(L.b) *
             amb_root(*H, 2 * static_cast<unsigned long>(n), (n + 1) * k * k);
    } else {
      zval = CycNum::from_long(L.b, H->conductor);
    }
    rho.gen_images = {scalar1(q_pow(k)), scalar1(q_pow(k)), scalar1(zval)};
  } else {
    long i = L.a, j = L.b;
    CycNum z10 = hopf ? q_pow(i * j) : CycNum::from_long(1, H->conductor);
    rho.gen_images = {diag2(q_pow(i), q_pow(j)), diag2(q_pow(j), q_pow(i)),
                      antidiag2(z10, CycNum::from_long(1, H->conductor))};
  }
  return rho;
}

Representation build_dihedral_rep(const HopfPtr& H, const RepLabel& L) {
  int m = H->param;
  // lambda = zeta_{2m} for the B-type families, zeta_m for the A-type ones
  unsigned long lam_order = family_is_b_type(H->family)
                                ? 2 * static_cast<unsigned long>(m)
                                : static_cast<unsigned long>(m);
  Representation rho;
  rho.H = H;
  rho.label = L;
  if (L.kind == RepKind::OneDimSigns) {
    rho.gen_images = {scalar1(CycNum::from_long(L.a, H->conductor)),
                      scalar1(CycNum::from_long(L.b, H->conductor)),
                      scalar1(CycNum::from_long(L.c, H->conductor))};
  } else {
    long i = L.a;
    int eps;
    if (L.kind == RepKind::TwoDimIndex) {
      eps = (i % 2 == 0) ? 1 : -1;  // a acts by (-1)^i
    } else {
      eps = L.b;
    }
    CycMatrix sp = antidiag2(CycNum::from_long(1, H->conductor),
                             CycNum::from_long(1, H->conductor));
    CycMatrix sm = antidiag2(amb_root(*H, lam_order, i), amb_root(*H, lam_order, -i));
    CycMatrix av = diag2(CycNum::from_long(eps, H->conductor),
                         CycNum::from_long(eps, H->conductor));
    rho.gen_images = {sp, sm, av};
  }
  return rho;
}

}  // namespace

Representation build_representation(const HopfPtr& H, const RepLabel& L) {
  // validate against the family (throws "label out of family" when foreign);
  // convenience labels (two canonical parts) are still built as written.
  canonical_label(*H, L);
  Representation rho;
  switch (L.kind) {
    case RepKind::OneDimCyc:
    case RepKind::TwoDimCyc:
      rho = build_cyc_rep(H, L);
      break;
    default:
      rho = build_dihedral_rep(H, L);
      break;
  }
  check_is_module(rho);
  return rho;
}

std::vector<RepLabel> irreducible_labels(const HopfPresentation& H) {
  std::vector<RepLabel> out;
  int n = H.param;
  if (family_is_cyc_type(H.family)) {
    for (int k = 0; k < n; ++k)
      for (int s : {1, -1}) out.push_back(label_T_cyc(k, s));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(label_pi_cyc(i, j));
    return out;
  }
  int m = n;
  if (family_is_b_type(H.family)) {
    int pm = (m % 2 == 0) ? 1 : -1;
    out.push_back(label_T_signs(1, 1, 1));
    out.push_back(label_T_signs(1, -1, pm));
    out.push_back(label_T_signs(-1, 1, pm));
    out.push_back(label_T_signs(-1, -1, 1));
    for (int i = 1; i <= m - 1; ++i) out.push_back(label_pi_index(i));
    return out;
  }
  // A-type
  if (m % 2 == 0) {
    for (int c1 : {1, -1})
      for (int c2 : {1, -1})
        for (int c3 : {1, -1}) out.push_back(label_T_signs(c1, c2, c3));
    for (int i = 1; i <= m / 2 - 1; ++i)
      for (int eps : {1, -1}) out.push_back(label_pi_index_sign(i, eps));
  } else {
    for (int c1 : {1, -1})
      for (int c3 : {1, -1}) out.push_back(label_T_signs(c1, c1, c3));
    for (int i = 1; i <= (m - 1) / 2; ++i)
      for (int eps : {1, -1}) out.push_back(label_pi_index_sign(i, eps));
  }
  return out;
}

std::vector<Representation> irreducible_catalog(const HopfPtr& H) {
  std::vector<Representation> out;
  for (const RepLabel& L : irreducible_labels(*H)) out.push_back(build_representation(H, L));
  return out;
}

void check_is_module(const Representation& rho) {
  const HopfPresentation& H = *rho.H;
  for (const Rule& r : H.rules) {
    CycMatrix lhs = rho.word_image(r.lhs);
    CycMatrix rhs(lhs.rows(), lhs.cols());
    for (const auto& [w, c] : r.rhs.terms) rhs = rhs + rho.word_image(w).scaled(c);
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "generator matrices";
      if (rho.label) os << " of " << rho.label->str();
      os << " violate the relation on " << word_str(r.lhs, H.gen_names);
      throw std::runtime_error(os.str());
    }
  }
}

Representation tensor_rep(const Representation& x, const Representation& y) {
  if (x.H != y.H) throw std::invalid_argument("tensor product across different algebras");
  const HopfPresentation& H = *x.H;
  Representation out;
  out.H = x.H;
  out.gen_images.reserve(H.generator_count());
  for (size_t g = 0; g < H.generator_count(); ++g) {
    size_t d = static_cast<size_t>(x.dim() * y.dim());
    CycMatrix img(d, d);
    for (const CoproductTerm& t : H.coproduct[g]) {
      img = img + kron(x.word_image(t.left), y.word_image(t.right)).scaled(t.coeff);
    }
    out.gen_images.push_back(std::move(img));
  }
  return out;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  if (x.H != y.H) throw std::invalid_argument("direct sum across different algebras");
  Representation out;
  out.H = x.H;
  size_t dx = static_cast<size_t>(x.dim()), dy = static_cast<size_t>(y.dim());
  for (size_t g = 0; g < x.gen_images.size(); ++g) {
    CycMatrix M(dx + dy, dx + dy);
    for (size_t i = 0; i < dx; ++i)
      for (size_t j = 0; j < dx; ++j) M.at(i, j) = x.gen_images[g].at(i, j);
    for (size_t i = 0; i < dy; ++i)
      for (size_t j = 0; j < dy; ++j) M.at(dx + i, dx + j) = y.gen_images[g].at(i, j);
    out.gen_images.push_back(std::move(M));
  }
  return out;
}

std::vector<CycMatrix> intertwiners(const Representation& S, const Representation& rho) {
  size_t ds = static_cast<size_t>(S.dim()), dr = static_cast<size_t>(rho.dim());
  size_t unknowns = dr * ds;  // M_{k,j}, row-major
  std::vector<CycMatrix> gens_s, gens_r;
  size_t ngen = S.gen_images.size();
  CycMatrix sys(ngen * dr * ds, unknowns);
  size_t row = 0;
  for (size_t g = 0; g < ngen; ++g) {
    const CycMatrix& A = rho.gen_images[g];  // dr x dr
    const CycMatrix& B = S.gen_images[g];    // ds x ds
    // constraint: (A M - M B)_{i,j} = 0
    for (size_t i = 0; i < dr; ++i) {
      for (size_t j = 0; j < ds; ++j) {
        for (size_t k = 0; k < dr; ++k)
          if (!A.at(i, k).is_zero()) sys.at(row, k * ds + j) += A.at(i, k);
        for (size_t k = 0; k < ds; ++k)
          if (!B.at(k, j).is_zero()) sys.at(row, i * ds + k) -= B.at(k, j);
        ++row;
      }
    }
  }
  CycMatrix K = kernel_basis(sys);
  std::vector<CycMatrix> out;
  for (size_t v = 0; v < K.rows(); ++v) {
    CycMatrix M(dr, ds);
    for (size_t i = 0; i < dr; ++i)
      for (size_t j = 0; j < ds; ++j) M.at(i, j) = K.at(v, i * ds + j);
    out.push_back(std::move(M));
  }
  return out;
}

std::vector<DecompositionPart> decompose(const Representation& rho) {
  std::vector<DecompositionPart> parts;
  int total = 0;
  for (const Representation& S : irreducible_catalog(rho.H)) {
    std::vector<CycMatrix> W = intertwiners(S, rho);
    if (W.empty()) continue;
    DecompositionPart p;
    p.label = *S.label;
    p.multiplicity = static_cast<int>(W.size());
    p.witnesses = std::move(W);
    total += p.multiplicity * p.label.dim();
    parts.push_back(std::move(p));
  }
  if (total != rho.dim()) {
    std::ostringstream os;
    os << "decomposition incomplete: catalog accounts for " << total << " of "
       << rho.dim() << " dimensions";
    throw std::runtime_error(os.str());
  }
  return parts;
}

std::vector<std::pair<RepLabel, int>> decompose_multiset(const Representation& rho) {
  std::vector<std::pair<RepLabel, int>> out;
  for (const DecompositionPart& p : decompose(rho)) out.emplace_back(p.label, p.multiplicity);
  return out;
}

}  // namespace hopf
