#include "hopf/module_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hopf/fusion.hpp"

namespace hopf {

namespace {

CycNum cyc_one() { return CycNum::from_long(1); }

bool is_one(const CycNum& c) {
  return c.is_rational() && c.rational_part() == 1;
}

void accumulate(std::map<size_t, CycNum>& acc, size_t idx, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, c);
  } else {
    it->second += c;
  }
}

SparseVec flatten(const std::map<size_t, CycNum>& acc) {
  SparseVec out;
  for (const auto& [idx, c] : acc) {
    if (!c.is_zero()) out.emplace_back(idx, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedAlgebra helpers
// ---------------------------------------------------------------------------

std::string GradedAlgebra::monomial_str(long d, size_t idx) const {
  if (d == 0) return "1";
  std::vector<size_t> w = monomial_word(d, idx);
  const auto& names = gen_names();
  std::ostringstream os;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    os << names.at(w[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

Mono GradedAlgebra::word_mono(const std::vector<size_t>& w) const {
  Mono m{0, cyc_one()};
  long d = 0;
  for (size_t g : w) {
    Mono step = append_gen(d, m.idx, g);
    m.idx = step.idx;
    if (!is_one(step.coeff)) m.coeff *= step.coeff;
    ++d;
    if (m.coeff.is_zero()) return m;
  }
  return m;
}

size_t GradedAlgebra::index_of_word(const std::vector<size_t>& w) const {
  Mono m = word_mono(w);
  if (!is_one(m.coeff)) {
    throw std::runtime_error("index_of_word: not a normal-form word");
  }
  return m.idx;
}

Mono GradedAlgebra::mono_product(long d1, size_t i1, long d2, size_t i2) const {
  std::vector<size_t> w2 = monomial_word(d2, i2);
  Mono m{i1, cyc_one()};
  long d = d1;
  for (size_t g : w2) {
    Mono step = append_gen(d, m.idx, g);
    m.idx = step.idx;
    if (!is_one(step.coeff)) m.coeff *= step.coeff;
    ++d;
  }
  return m;
}

std::pair<size_t, size_t> GradedAlgebra::split_first(long d, size_t idx) const {
  if (d < 1) throw std::invalid_argument("split_first: degree must be positive");
  std::vector<size_t> w = monomial_word(d, idx);
  size_t g = w.front();
  std::vector<size_t> tail(w.begin() + 1, w.end());
  Mono m = word_mono(tail);
  if (!is_one(m.coeff)) {
    throw std::runtime_error("split_first: tail of a normal word is not normal");
  }
  return {g, m.idx};
}

// ---------------------------------------------------------------------------
// Skew plane  k<u,v> / (vu - c uv); basis u^a v^b, index = b.
// ---------------------------------------------------------------------------

namespace {

class SkewPlane final : public GradedAlgebra {
 public:
  SkewPlane(CycNum c, std::vector<std::string> names)
      : c_(std::move(c)), names_(std::move(names)) {
    if (c_.is_zero()) throw std::invalid_argument("skew plane: c must be nonzero");
  }

  std::string name() const override {
    return "skew(" + c_.str() + ")";
  }
  size_t num_gens() const override { return 2; }
  const std::vector<std::string>& gen_names() const override { return names_; }
  size_t dim(long d) const override {
    return d < 0 ? 0 : static_cast<size_t>(d + 1);
  }

  std::vector<size_t> monomial_word(long d, size_t idx) const override {
    std::vector<size_t> w(static_cast<size_t>(d), 0);
    for (size_t i = static_cast<size_t>(d) - idx; i < static_cast<size_t>(d); ++i) w[i] = 1;
    return w;
  }

  Mono append_gen(long /*d*/, size_t idx, size_t g) const override {
    size_t b = idx;
    if (g == 1) return {b + 1, cyc_one()};
    // u past v^b picks up c^b
    return {b, c_.pow(static_cast<long>(b))};
  }

  Mono prepend_gen(long d, size_t idx, size_t g) const override {
    size_t b = idx;
    size_t a = static_cast<size_t>(d) - b;
    if (g == 0) return {b, cyc_one()};
    // v past u^a picks up c^a
    return {b + 1, c_.pow(static_cast<long>(a))};
  }

  std::vector<SparseVec> relations() const override {
    // c * (u tensor v) - (v tensor u)
    SparseVec r;
    r.emplace_back(1, c_);
    r.emplace_back(2, -cyc_one());
    return {r};
  }

 private:
  CycNum c_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Square-exchange plane  k<u,v> / (u^2 + gamma v^2); basis u^k (vu)^q v^delta,
// index = 2q + delta (so k = d - index).  Derived rules: v^2 = e u^2 with
// e = -1/gamma, and u^2 is central.
// ---------------------------------------------------------------------------

class SquareExchangePlane final : public GradedAlgebra {
 public:
  SquareExchangePlane(CycNum gamma, std::vector<std::string> names)
      : gamma_(std::move(gamma)), names_(std::move(names)) {
    if (gamma_.is_zero()) {
      throw std::invalid_argument("square-exchange plane: gamma must be nonzero");
    }
    e_ = -gamma_.inverse();
  }

  std::string name() const override {
    return "square-exchange(" + gamma_.str() + ")";
  }
  size_t num_gens() const override { return 2; }
  const std::vector<std::string>& gen_names() const override { return names_; }
  size_t dim(long d) const override {
    return d < 0 ? 0 : static_cast<size_t>(d + 1);
  }

  std::vector<size_t> monomial_word(long d, size_t idx) const override {
    size_t k = static_cast<size_t>(d) - idx;
    size_t q = idx / 2, delta = idx % 2;
    std::vector<size_t> w;
    w.reserve(static_cast<size_t>(d));
    for (size_t i = 0; i < k; ++i) w.push_back(0);
    for (size_t i = 0; i < q; ++i) {
      w.push_back(1);
      w.push_back(0);
    }
    if (delta) w.push_back(1);
    return w;
  }

  Mono append_gen(long /*d*/, size_t idx, size_t g) const override {
    size_t delta = idx % 2;
    if (g == 0) {
      if (delta == 1) return {idx + 1, cyc_one()};   // (k,q,1)u = (k,q+1,0)
      if (idx == 0) return {0, cyc_one()};           // u^k u = u^{k+1}
      return {idx - 1, cyc_one()};                   // (k,q,0)u = (k+2,q-1,1)
    }
    if (delta == 0) return {idx + 1, cyc_one()};     // (k,q,0)v = (k,q,1)
    return {idx - 1, e_};                            // (k,q,1)v = e (k+2,q,0)
  }

  Mono prepend_gen(long d, size_t idx, size_t g) const override {
    if (g == 0) return {idx, cyc_one()};             // u (k,q,delta) = (k+1,q,delta)
    long k = d - static_cast<long>(idx);
    if (k % 2 == 1) return {idx + 2, cyc_one()};     // v u^k = u^{k-1}(vu), k odd
    size_t q = idx / 2, delta = idx % 2;
    if (q >= 1) return {idx - 2, e_};                // v (k,q,delta) = e (k+3,q-1,delta)
    if (delta == 0) return {idx + 1, cyc_one()};     // v u^k = u^k v, k even
    return {idx - 1, e_};                            // v u^k v = e u^{k+2}
  }

  std::vector<SparseVec> relations() const override {
    // u tensor u + gamma * (v tensor v)
    SparseVec r;
    r.emplace_back(0, cyc_one());
    r.emplace_back(3, gamma_);
    return {r};
  }

 private:
  CycNum gamma_, e_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Ore extension base[t; sigma]:  t g = sigma(g) t.  Basis (base monomial) t^k,
// ordered graded-lexicographically with the base generators below t.
// ---------------------------------------------------------------------------

class OreExtension final : public GradedAlgebra {
 public:
  OreExtension(AlgebraPtr base, const CycMatrix& sigma, std::string t_name)
      : base_(std::move(base)) {
    G_ = base_->num_gens();
    if (sigma.rows() != G_ || sigma.cols() != G_) {
      throw std::invalid_argument("ore extension: sigma has the wrong shape");
    }
    names_ = base_->gen_names();
    names_.push_back(std::move(t_name));
    for (size_t g = 0; g < G_; ++g) {
      size_t img = G_;
      CycNum coeff;
      for (size_t r = 0; r < G_; ++r) {
        if (sigma.at(r, g).is_zero()) continue;
        if (img != G_) {
          throw std::invalid_argument(
              "ore extension: sigma must map each generator to a scalar "
              "multiple of a generator");
        }
        img = r;
        coeff = sigma.at(r, g);
      }
      if (img == G_) throw std::invalid_argument("ore extension: sigma is singular");
      sigma_gen_.emplace_back(img, coeff);
    }
    sig_pow_.push_back({});
    for (size_t g = 0; g < G_; ++g) sig_pow_[0].emplace_back(g, cyc_one());
  }

  std::string name() const override { return base_->name() + "[t]"; }
  size_t num_gens() const override { return G_ + 1; }
  const std::vector<std::string>& gen_names() const override { return names_; }

  size_t dim(long d) const override {
    if (d < 0) return 0;
    size_t total = 0;
    for (long k = 0; k <= d; ++k) total += base_->dim(d - k);
    return total;
  }

  std::vector<size_t> monomial_word(long d, size_t idx) const override {
    const Layer& L = layer(d);
    auto [k, b] = L.order.at(idx);
    std::vector<size_t> w = base_->monomial_word(d - k, b);
    for (long i = 0; i < k; ++i) w.push_back(G_);
    return w;
  }

  Mono append_gen(long d, size_t idx, size_t g) const override {
    const Layer& L = layer(d);
    auto [k, b] = L.order.at(idx);
    if (g == G_) return {index_of(d + 1, k + 1, b), cyc_one()};
    auto [g2, c2] = sigma_pow(k, g);
    Mono mb = base_->append_gen(d - k, b, g2);
    CycNum coeff = c2;
    if (!is_one(mb.coeff)) coeff *= mb.coeff;
    return {index_of(d + 1, k, mb.idx), coeff};
  }

  Mono prepend_gen(long d, size_t idx, size_t g) const override {
    const Layer& L = layer(d);
    auto [k, b] = L.order.at(idx);
    if (g < G_) {
      Mono mb = base_->prepend_gen(d - k, b, g);
      return {index_of(d + 1, k, mb.idx), mb.coeff};
    }
    // t * (r t^k) = sigma(r) t^{k+1}
    std::vector<size_t> w = base_->monomial_word(d - k, b);
    CycNum coeff = cyc_one();
    for (size_t& letter : w) {
      const auto& [l2, c2] = sigma_gen_[letter];
      letter = l2;
      if (!is_one(c2)) coeff *= c2;
    }
    Mono mb = base_->word_mono(w);
    if (!is_one(mb.coeff)) coeff *= mb.coeff;
    return {index_of(d + 1, k + 1, mb.idx), coeff};
  }

  std::vector<SparseVec> relations() const override {
    std::vector<SparseVec> out;
    size_t G = G_ + 1;
    for (const SparseVec& r : base_->relations()) {
      SparseVec row;
      for (const auto& [code, c] : r) {
        size_t i = code / G_, j = code % G_;
        row.emplace_back(i * G + j, c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(row));
    }
    for (size_t g = 0; g < G_; ++g) {
      // t tensor g - sigma(g) tensor t
      const auto& [g2, c2] = sigma_gen_[g];
      SparseVec row;
      row.emplace_back(g2 * G + G_, -c2);
      row.emplace_back(G_ * G + g, cyc_one());
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  struct Layer {
    std::vector<std::pair<long, size_t>> order;  // index -> (t exponent, base idx)
    std::vector<std::vector<size_t>> pos;        // pos[k][base idx] -> index
  };

  const Layer& layer(long d) const {
    if (static_cast<long>(layers_.size()) <= d) layers_.resize(d + 1);
    Layer& L = layers_[d];
    if (L.pos.empty()) {
      std::vector<std::pair<std::vector<size_t>, std::pair<long, size_t>>> items;
      for (long k = 0; k <= d; ++k) {
        size_t nb = base_->dim(d - k);
        for (size_t b = 0; b < nb; ++b) {
          std::vector<size_t> w = base_->monomial_word(d - k, b);
          for (long i = 0; i < k; ++i) w.push_back(G_);
          items.emplace_back(std::move(w), std::make_pair(k, b));
        }
      }
      std::sort(items.begin(), items.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      L.pos.assign(d + 1, {});
      for (long k = 0; k <= d; ++k) L.pos[k].assign(base_->dim(d - k), 0);
      for (size_t i = 0; i < items.size(); ++i) {
        auto [k, b] = items[i].second;
        L.order.push_back(items[i].second);
        L.pos[k][b] = i;
      }
    }
    return L;
  }

  size_t index_of(long d, long k, size_t b) const {
    return layer(d).pos.at(k).at(b);
  }

  std::pair<size_t, CycNum> sigma_pow(long k, size_t g) const {
    while (static_cast<long>(sig_pow_.size()) <= k) {
      const auto& prev = sig_pow_.back();
      std::vector<std::pair<size_t, CycNum>> next;
      for (size_t x = 0; x < G_; ++x) {
        const auto& [g1, c1] = prev[x];
        const auto& [g2, c2] = sigma_gen_[g1];
        next.emplace_back(g2, c1 * c2);
      }
      sig_pow_.push_back(std::move(next));
    }
    return sig_pow_[k][g];
  }

  AlgebraPtr base_;
  size_t G_;
  std::vector<std::string> names_;
  std::vector<std::pair<size_t, CycNum>> sigma_gen_;
  mutable std::vector<std::vector<std::pair<size_t, CycNum>>> sig_pow_;
  mutable std::vector<Layer> layers_;
};

}  // namespace

AlgebraPtr make_skew_plane(const CycNum& c, std::vector<std::string> names) {
  return std::make_shared<SkewPlane>(c, std::move(names));
}

AlgebraPtr make_square_exchange_plane(const CycNum& gamma,
                                      std::vector<std::string> names) {
  return std::make_shared<SquareExchangePlane>(gamma, std::move(names));
}

AlgebraPtr make_ore_extension(AlgebraPtr base, const CycMatrix& sigma,
                              std::string t_name) {
  return std::make_shared<OreExtension>(std::move(base), sigma, std::move(t_name));
}

// ---------------------------------------------------------------------------
// ActionTable
// ---------------------------------------------------------------------------

ActionTable::ActionTable(const ModuleAlgebra& M) : M_(&M) {
  if (M.deg1.dim() != static_cast<int>(M.alg->num_gens())) {
    throw std::invalid_argument(
        "module algebra: degree-one module dimension does not match the "
        "generator count");
  }
  size_t G = M.H->generator_count();
  for (size_t g = 0; g < G; ++g) {
    Word w{static_cast<int>(g)};
    if (!carrier_index_.count(w)) {
      carrier_index_[w] = carrier_.size();
      carrier_.push_back(w);
    }
  }
  close_carrier();
  table_.resize(carrier_.size());
  for (size_t i = 0; i < carrier_.size(); ++i) {
    CycNum eps = M_->H->counit_of_word(carrier_[i]);
    SparseVec col;
    if (!eps.is_zero()) col.emplace_back(0, eps);
    table_[i].push_back({col});
  }
  split_cache_.push_back({});
  built_ = 0;
}

const CycMatrix& ActionTable::deg1_image(const Word& w) {
  auto it = deg1_cache_.find(w);
  if (it == deg1_cache_.end()) {
    it = deg1_cache_.emplace(w, M_->deg1.word_image(w)).first;
  }
  return it->second;
}

void ActionTable::close_carrier() {
  std::vector<Word> queue = carrier_;
  while (!queue.empty()) {
    Word w = queue.back();
    queue.pop_back();
    for (const auto& [pair, c] : M_->H->coproduct_of_word(w)) {
      (void)c;
      if (!carrier_index_.count(pair.second)) {
        carrier_index_[pair.second] = carrier_.size();
        carrier_.push_back(pair.second);
        queue.push_back(pair.second);
      }
    }
  }
}

std::vector<SparseVec> ActionTable::build_word_degree(const Word& w, long d) {
  const GradedAlgebra& A = *M_->alg;
  size_t nd = A.dim(d);
  size_t nV = A.num_gens();
  const TensorElem& cp = M_->H->coproduct_of_word(w);
  std::vector<SparseVec> cols(nd);
  for (size_t j = 0; j < nd; ++j) {
    auto [g0, tail] = split_cache_[d][j];
    std::map<size_t, CycNum> acc;
    for (const auto& [pair, c] : cp) {
      const CycMatrix& W1 = deg1_image(pair.first);
      const auto& right = table_[carrier_index_.at(pair.second)][d - 1][tail];
      for (size_t y = 0; y < nV; ++y) {
        const CycNum& a = W1.at(y, g0);
        if (a.is_zero()) continue;
        CycNum ca = c * a;
        for (const auto& [N, beta] : right) {
          Mono p = A.prepend_gen(d - 1, N, y);
          CycNum add = ca * beta;
          if (!is_one(p.coeff)) add *= p.coeff;
          accumulate(acc, p.idx, add);
        }
      }
    }
    cols[j] = flatten(acc);
  }
  return cols;
}

void ActionTable::ensure(long d) {
  const GradedAlgebra& A = *M_->alg;
  for (long deg = built_ + 1; deg <= d; ++deg) {
    size_t nd = A.dim(deg);
    std::vector<std::pair<size_t, size_t>> splits(nd);
    for (size_t j = 0; j < nd; ++j) splits[j] = A.split_first(deg, j);
    split_cache_.push_back(std::move(splits));
    for (size_t i = 0; i < carrier_.size(); ++i) {
      table_[i].push_back(build_word_degree(carrier_[i], deg));
    }
    built_ = deg;
  }
}

const std::vector<SparseVec>& ActionTable::word_action(const Word& w, long d) {
  auto it = carrier_index_.find(w);
  if (it == carrier_index_.end()) {
    size_t first_new = carrier_.size();
    carrier_index_[w] = first_new;
    carrier_.push_back(w);
    close_carrier();
    table_.resize(carrier_.size());
    for (size_t i = first_new; i < carrier_.size(); ++i) {
      CycNum eps = M_->H->counit_of_word(carrier_[i]);
      SparseVec col;
      if (!eps.is_zero()) col.emplace_back(0, eps);
      table_[i].push_back({col});
    }
    for (long deg = 1; deg <= built_; ++deg) {
      for (size_t i = first_new; i < carrier_.size(); ++i) {
        table_[i].push_back(build_word_degree(carrier_[i], deg));
      }
    }
    it = carrier_index_.find(w);
  }
  ensure(d);
  return table_[it->second][d];
}

std::vector<SparseVec> ActionTable::action_of(const LinComb& x, long d) {
  size_t nd = M_->alg->dim(d);
  std::vector<std::map<size_t, CycNum>> acc(nd);
  for (const auto& [w, c] : x.terms) {
    const auto& cols = word_action(w, d);
    for (size_t j = 0; j < nd; ++j) {
      for (const auto& [idx, v] : cols[j]) accumulate(acc[j], idx, c * v);
    }
  }
  std::vector<SparseVec> out(nd);
  for (size_t j = 0; j < nd; ++j) out[j] = flatten(acc[j]);
  return out;
}

const std::vector<SparseVec>& ActionTable::generator_action(int gen, long d) {
  return word_action(Word{gen}, d);
}

CycMatrix ActionTable::dense_generator_action(int gen, long d) {
  const auto& cols = generator_action(gen, d);
  size_t nd = M_->alg->dim(d);
  CycMatrix M(nd, nd);
  for (size_t j = 0; j < nd; ++j) {
    for (const auto& [i, c] : cols[j]) M.at(i, j) = c;
  }
  return M;
}

// ---------------------------------------------------------------------------
// Tensor-route oracle and generic quotient
// ---------------------------------------------------------------------------

std::vector<SparseVec> action_via_tensor(const ModuleAlgebra& M, int gen,
                                         long d) {
  const GradedAlgebra& A = *M.alg;
  if (d == 0) {
    CycNum eps = M.H->counit[static_cast<size_t>(gen)];
    SparseVec col;
    if (!eps.is_zero()) col.emplace_back(0, eps);
    return {col};
  }
  auto terms = M.H->iterated_coproduct(gen, static_cast<int>(d));
  std::map<Word, CycMatrix> img;
  for (const auto& [c, legs] : terms) {
    (void)c;
    for (const Word& w : legs) {
      if (!img.count(w)) img.emplace(w, M.deg1.word_image(w));
    }
  }
  size_t nd = A.dim(d);
  size_t nV = A.num_gens();
  std::vector<SparseVec> cols(nd);
  std::vector<size_t> letters(static_cast<size_t>(d));
  for (size_t j = 0; j < nd; ++j) {
    std::vector<size_t> wj = A.monomial_word(d, j);
    std::map<size_t, CycNum> acc;
    for (const auto& [c, legs] : terms) {
      std::function<void(size_t, const CycNum&)> rec = [&](size_t pos,
                                                           const CycNum& coeff) {
        if (pos == static_cast<size_t>(d)) {
          Mono m = A.word_mono(letters);
          CycNum add = coeff;
          if (!is_one(m.coeff)) add *= m.coeff;
          accumulate(acc, m.idx, add);
          return;
        }
        const CycMatrix& W = img.at(legs[pos]);
        for (size_t y = 0; y < nV; ++y) {
          const CycNum& a = W.at(y, wj[pos]);
          if (a.is_zero()) continue;
          letters[pos] = y;
          rec(pos + 1, coeff * a);
        }
      };
      rec(0, c);
    }
    cols[j] = flatten(acc);
  }
  return cols;
}

namespace {

size_t upow(size_t base, long e) {
  size_t r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// Embedded relation rows of V^{tensor d} spanning sum_p V^p R V^{d-2-p};
// coordinates are big-endian base-G words.
std::vector<SparseVec> embedded_relation_rows(const GradedAlgebra& A, long d) {
  size_t G = A.num_gens();
  auto rels = A.relations();
  std::vector<SparseVec> rows;
  for (long p = 0; p + 2 <= d; ++p) {
    long right = d - 2 - p;
    size_t PL = upow(G, p), PR = upow(G, right);
    for (size_t lcode = 0; lcode < PL; ++lcode) {
      for (size_t rcode = 0; rcode < PR; ++rcode) {
        for (const SparseVec& r : rels) {
          SparseVec row;
          for (const auto& [ij, c] : r) {
            size_t i = ij / G, j = ij % G;
            row.emplace_back(((lcode * G + i) * G + j) * PR + rcode, c);
          }
          std::sort(row.begin(), row.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::vector<size_t> decode_word(size_t code, size_t G, long d) {
  std::vector<size_t> w(static_cast<size_t>(d));
  for (long i = d - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = code % G;
    code /= G;
  }
  return w;
}

}  // namespace

size_t tensor_quotient_dim(const GradedAlgebra& A, long d) {
  if (d < 2) return d < 0 ? 0 : A.num_gens() == 0 ? 1 : upow(A.num_gens(), d);
  auto rows = embedded_relation_rows(A, d);
  size_t rank = echelon_sparse(rows).size();
  return upow(A.num_gens(), d) - rank;
}

// ---------------------------------------------------------------------------
// Engine certification
// ---------------------------------------------------------------------------

EngineCertificate certify_engine(const GradedAlgebra& A, long max_degree) {
  EngineCertificate cert;
  cert.max_degree = max_degree;
  size_t G = A.num_gens();
  auto fail = [&](long d, const std::string& what) {
    cert.ok = false;
    cert.detail = "degree " + std::to_string(d) + ": " + what;
    return cert;
  };
  if (A.dim(0) != 1) return fail(0, "dim A_0 != 1");
  if (A.dim(1) != G) return fail(1, "dim A_1 != number of generators");
  for (long d = 2; d <= max_degree; ++d) {
    size_t N1 = A.dim(d - 1), N2 = A.dim(d - 2), Nd = A.dim(d);
    // (c) one-letter split consistency: prepending the first letter of each
    // basis word onto its tail reproduces the monomial with coefficient 1.
    for (size_t idx = 0; idx < Nd; ++idx) {
      auto [g, tail] = A.split_first(d, idx);
      Mono p = A.prepend_gen(d - 1, tail, g);
      if (p.idx != idx || !is_one(p.coeff)) {
        return fail(d, "split/prepend mismatch at monomial " +
                           A.monomial_str(d, idx));
      }
    }
    // Embedded relation image S_d inside V tensor A_{d-1}.
    std::vector<SparseVec> S;
    for (const SparseVec& r : A.relations()) {
      for (size_t m2 = 0; m2 < N2; ++m2) {
        std::map<size_t, CycNum> row;
        for (const auto& [ij, c] : r) {
          size_t i = ij / G, j = ij % G;
          Mono p = A.prepend_gen(d - 2, m2, j);
          CycNum add = c;
          if (!is_one(p.coeff)) add *= p.coeff;
          accumulate(row, i * N1 + p.idx, add);
        }
        SparseVec v = flatten(row);
        if (!v.empty()) S.push_back(std::move(v));
      }
    }
    // (b) the one-letter multiplication map kills S_d.
    for (const SparseVec& row : S) {
      std::map<size_t, CycNum> image;
      for (const auto& [pos, c] : row) {
        size_t x = pos / N1, m = pos % N1;
        Mono p = A.prepend_gen(d - 1, m, x);
        CycNum add = c;
        if (!is_one(p.coeff)) add *= p.coeff;
        accumulate(image, p.idx, add);
      }
      if (!flatten(image).empty()) {
        return fail(d, "a relation is not killed by the rewriting rules");
      }
    }
    // (a) rank additivity: dim A_d = G * dim A_{d-1} - rank S_d.
    size_t rank = echelon_sparse(S).size();
    if (Nd != G * N1 - rank) {
      return fail(d, "dimension mismatch: engine " + std::to_string(Nd) +
                         " vs quotient " + std::to_string(G * N1 - rank));
    }
  }
  cert.ok = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Module-algebra certificate
// ---------------------------------------------------------------------------

namespace {

// Empty string when R is stable under the degree-2 action; otherwise the name
// of a violating generator.
std::string relation_stability_violation(const ModuleAlgebra& M) {
  const GradedAlgebra& A = *M.alg;
  size_t nV = A.num_gens();
  auto rels = A.relations();
  CycMatrix R(rels.size(), nV * nV);
  for (size_t r = 0; r < rels.size(); ++r) {
    for (const auto& [code, c] : rels[r]) R.at(r, code) = c;
  }
  size_t base_rank = rank(R);
  size_t G = M.H->generator_count();
  for (size_t g = 0; g < G; ++g) {
    CycMatrix T2(nV * nV, nV * nV);
    for (const auto& [pair, c] :
         M.H->coproduct_of_word(Word{static_cast<int>(g)})) {
      T2 = T2 + kron(M.deg1.word_image(pair.first),
                     M.deg1.word_image(pair.second))
                    .scaled(c);
    }
    for (const SparseVec& r : rels) {
      std::vector<CycNum> v(nV * nV);
      for (const auto& [code, c] : r) v[code] = c;
      std::vector<CycNum> x = T2.apply(v);
      CycMatrix aug(rels.size() + 1, nV * nV);
      for (size_t rr = 0; rr < rels.size(); ++rr) {
        for (const auto& [code, c] : rels[rr]) aug.at(rr, code) = c;
      }
      for (size_t col = 0; col < nV * nV; ++col) aug.at(rels.size(), col) = x[col];
      if (rank(aug) != base_rank) return M.H->gen_names[g];
    }
  }
  return "";
}

bool sparse_columns_equal(const std::vector<SparseVec>& a,
                          const std::vector<SparseVec>& b) {
  if (a.size() != b.size()) return false;
  for (size_t j = 0; j < a.size(); ++j) {
    std::map<size_t, CycNum> ma(a[j].begin(), a[j].end());
    std::map<size_t, CycNum> mb(b[j].begin(), b[j].end());
    if (ma.size() != mb.size()) return false;
    for (const auto& [k, v] : ma) {
      auto it = mb.find(k);
      if (it == mb.end() || !(it->second == v)) return false;
    }
  }
  return true;
}

}  // namespace

ModuleAlgebraReport check_module_algebra(const ModuleAlgebra& M,
                                         long engine_degree,
                                         long action_degree) {
  ModuleAlgebraReport rep;
  rep.engine_degree = engine_degree;
  rep.action_degree = action_degree;
  std::string bad = relation_stability_violation(M);
  rep.relations_stable = bad.empty();
  if (!bad.empty()) {
    rep.detail += "relation subspace not H-stable (generator " + bad + "); ";
  }
  EngineCertificate cert = certify_engine(*M.alg, engine_degree);
  rep.engine_certified = cert.ok;
  if (!cert.ok) rep.detail += "engine: " + cert.detail + "; ";

  const GradedAlgebra& A = *M.alg;
  size_t G = M.H->generator_count();
  ActionTable table(M);

  // Tensor-route comparison (and well-definedness on relation representatives).
  rep.actions_well_defined = true;
  for (long d = 1; d <= action_degree && rep.actions_well_defined; ++d) {
    for (size_t g = 0; g < G; ++g) {
      auto via_tensor = action_via_tensor(M, static_cast<int>(g), d);
      const auto& via_table = table.generator_action(static_cast<int>(g), d);
      if (!sparse_columns_equal(via_tensor, via_table)) {
        rep.actions_well_defined = false;
        rep.detail += "tensor-route mismatch for generator " +
                      M.H->gen_names[g] + " at degree " + std::to_string(d) +
                      "; ";
        break;
      }
    }
  }
  long relcheck_degree = std::min(action_degree, static_cast<long>(4));
  for (long d = 2; d <= relcheck_degree && rep.actions_well_defined; ++d) {
    auto rows = embedded_relation_rows(A, d);
    size_t nV = A.num_gens();
    for (size_t g = 0; g < G && rep.actions_well_defined; ++g) {
      auto terms = M.H->iterated_coproduct(static_cast<int>(g),
                                           static_cast<int>(d));
      std::map<Word, CycMatrix> img;
      for (const auto& [c, legs] : terms) {
        (void)c;
        for (const Word& w : legs) {
          if (!img.count(w)) img.emplace(w, M.deg1.word_image(w));
        }
      }
      for (const SparseVec& row : rows) {
        std::map<size_t, CycNum> acc;
        std::vector<size_t> letters(static_cast<size_t>(d));
        for (const auto& [code, rc] : row) {
          std::vector<size_t> wj = decode_word(code, nV, d);
          for (const auto& [c, legs] : terms) {
            std::function<void(size_t, const CycNum&)> rec =
                [&](size_t pos, const CycNum& coeff) {
                  if (pos == static_cast<size_t>(d)) {
                    Mono m = A.word_mono(letters);
                    CycNum add = coeff;
                    if (!is_one(m.coeff)) add *= m.coeff;
                    accumulate(acc, m.idx, add);
                    return;
                  }
                  const CycMatrix& W = img.at(legs[pos]);
                  for (size_t y = 0; y < nV; ++y) {
                    const CycNum& a = W.at(y, wj[pos]);
                    if (a.is_zero()) continue;
                    letters[pos] = y;
                    rec(pos + 1, coeff * a);
                  }
                };
            rec(0, rc * c);
          }
        }
        if (!flatten(acc).empty()) {
          rep.actions_well_defined = false;
          rep.detail += "action not well defined on a degree-" +
                        std::to_string(d) + " relation representative; ";
          break;
        }
      }
    }
  }

  // Product rule h(ab) = sum h1(a) h2(b) for basis monomials a, b.
  rep.multiplicative = true;
  for (long d1 = 1; d1 < action_degree && rep.multiplicative; ++d1) {
    for (long d2 = 1; d1 + d2 <= action_degree && rep.multiplicative; ++d2) {
      size_t n1 = A.dim(d1), n2 = A.dim(d2);
      long d = d1 + d2;
      for (size_t g = 0; g < G && rep.multiplicative; ++g) {
        const auto& big = table.generator_action(static_cast<int>(g), d);
        const TensorElem& cp =
            M.H->coproduct_of_word(Word{static_cast<int>(g)});
        for (size_t i1 = 0; i1 < n1 && rep.multiplicative; ++i1) {
          for (size_t i2 = 0; i2 < n2; ++i2) {
            Mono prod = A.mono_product(d1, i1, d2, i2);
            std::map<size_t, CycNum> lhs;
            for (const auto& [idx, c] : big[prod.idx]) {
              accumulate(lhs, idx, c * prod.coeff);
            }
            std::map<size_t, CycNum> rhs;
            for (const auto& [pair, c] : cp) {
              const auto& left = table.word_action(pair.first, d1)[i1];
              const auto& right = table.word_action(pair.second, d2)[i2];
              for (const auto& [a, ca] : left) {
                for (const auto& [b, cb] : right) {
                  Mono m = A.mono_product(d1, a, d2, b);
                  CycNum add = c * ca * cb;
                  if (!is_one(m.coeff)) add *= m.coeff;
                  accumulate(rhs, m.idx, add);
                }
              }
            }
            SparseVec l = flatten(lhs), r = flatten(rhs);
            if (!(l == r)) {
              rep.multiplicative = false;
              rep.detail += "product rule fails for generator " +
                            M.H->gen_names[g] + " on " +
                            A.monomial_str(d1, i1) + " * " +
                            A.monomial_str(d2, i2) + "; ";
              break;
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Standard actions
// ---------------------------------------------------------------------------

RepLabel trivial_label(const HopfPresentation& H) {
  if (H.family == Family::H2n2 || H.family == Family::WreathZnS2) {
    return label_T_cyc(0, +1);
  }
  return label_T_signs(1, 1, 1);
}

namespace {

ModuleAlgebra finish_two_gen(const HopfPtr& H, AlgebraPtr alg, RepLabel pl,
                             std::string name, std::string desc) {
  ModuleAlgebra M;
  M.H = H;
  M.alg = std::move(alg);
  M.deg1 = build_representation(H, pl);
  M.name = std::move(name);
  M.relation_desc = std::move(desc);
  M.deg1_labels = {pl};
  M.inner_faithful = inner_faithful_criterion(*H, {pl});
  return M;
}

}  // namespace

ModuleAlgebra make_h2n2_module(const HopfPtr& H, int i, int j, int sign) {
  if (H->family != Family::H2n2) {
    throw std::invalid_argument("make_h2n2_module: wrong family");
  }
  int n = H->param;
  long e = static_cast<long>(n + 1) * static_cast<long>(i) * i -
           static_cast<long>(n + 1) * static_cast<long>(j) * j;
  CycNum p_pow = CycNum::root_of_unity(2ul * static_cast<unsigned long>(n), e);
  CycNum c = sign < 0 ? p_pow : -p_pow;
  std::string nm = sign < 0 ? "Aminus" : "Aplus";
  std::string desc = "v u = (" + c.str() + ") u v";
  return finish_two_gen(H, make_skew_plane(c), label_pi_cyc(i, j), nm, desc);
}

ModuleAlgebra make_b4m_module(const HopfPtr& H, int i, int sign) {
  if (H->family != Family::B4m) {
    throw std::invalid_argument("make_b4m_module: wrong family");
  }
  int m = H->param;
  CycNum lam_i = CycNum::root_of_unity(2ul * static_cast<unsigned long>(m), i);
  CycNum gamma = sign < 0 ? -lam_i : lam_i;
  std::string nm = sign < 0 ? "Aminus" : "Aplus";
  std::string desc = "u^2 + (" + gamma.str() + ") v^2 = 0";
  return finish_two_gen(H, make_square_exchange_plane(gamma),
                        label_pi_index(i), nm, desc);
}

ModuleAlgebra make_a4m_odd_module(const HopfPtr& H, int i, int sign) {
  if (H->family != Family::A4m || H->param % 2 == 0) {
    throw std::invalid_argument("make_a4m_odd_module: wrong family or parity");
  }
  int m = H->param;
  CycNum lam_i = CycNum::root_of_unity(static_cast<unsigned long>(m), i);
  CycNum gamma = sign < 0 ? -lam_i : lam_i;
  std::string nm = sign < 0 ? "Aminus" : "Aplus";
  std::string desc = "u^2 + (" + gamma.str() + ") v^2 = 0";
  return finish_two_gen(H, make_square_exchange_plane(gamma),
                        label_pi_index_sign(i, -1), nm, desc);
}

ModuleAlgebra make_a4m_even_module(const HopfPtr& H, int k, int i, int eps,
                                   int sign) {
  if (H->family != Family::A4m || H->param % 2 != 0) {
    throw std::invalid_argument("make_a4m_even_module: wrong family or parity");
  }
  if (k < 1 || k > 5) {
    throw std::invalid_argument("make_a4m_even_module: k must be 1..5");
  }
  int m = H->param;
  CycNum lam_i = CycNum::root_of_unity(static_cast<unsigned long>(m), i);
  AlgebraPtr base;
  std::string desc;
  if (k == 1 || k == 3) {
    CycNum c = CycNum::from_long(-sign);  // u v + sign * v u = 0
    base = make_skew_plane(c);
    desc = std::string("u v ") + (sign < 0 ? "-" : "+") + " v u = 0";
  } else {
    CycNum gamma = sign < 0 ? -lam_i : lam_i;
    base = make_square_exchange_plane(gamma);
    desc = "u^2 + (" + gamma.str() + ") v^2 = 0";
  }
  CycMatrix sigma(2, 2);
  sigma.at(1, 0) = lam_i;
  sigma.at(0, 1) = (k >= 4) ? -cyc_one() : cyc_one();
  RepLabel pl = (k == 1 || k == 3) ? label_pi_index_sign(i, +1)
                                   : label_pi_index_sign(i, -1);
  RepLabel tl = (k <= 2) ? label_T_signs(eps, eps, -1)
              : (k <= 4) ? label_T_signs(eps, -eps, -1)
                         : label_T_signs(eps, -eps, +1);
  ModuleAlgebra M;
  M.H = H;
  M.alg = make_ore_extension(base, sigma);
  M.deg1 = direct_sum(build_representation(H, pl), build_representation(H, tl));
  M.name = "A" + std::to_string(k) + (sign < 0 ? "minus" : "plus");
  M.relation_desc = desc + "; t u = sigma(u) t, t v = sigma(v) t";
  M.deg1_labels = {pl, tl};
  M.inner_faithful = inner_faithful_criterion(*H, {pl, tl});
  return M;
}

std::vector<std::string> standard_action_names(const HopfPresentation& H) {
  switch (H.family) {
    case Family::H2n2:
      if (H.param == 2) return {"KP-a", "KP-b", "KP-c", "KP-d"};
      return {"Aminus", "Aplus"};
    case Family::B4m:
      return {"Aminus", "Aplus"};
    case Family::A4m:
      if (H.param % 2 == 1) return {"Aminus", "Aplus"};
      return {"A1minus", "A2minus", "A3minus", "A4minus", "A5minus",
              "A1plus",  "A2plus",  "A3plus",  "A4plus",  "A5plus"};
    default:
      return {};
  }
}

ModuleAlgebra make_standard_action(const HopfPtr& H, const std::string& name) {
  auto bad_name = [&]() -> std::invalid_argument {
    std::string valid;
    for (const auto& n : standard_action_names(*H)) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    return std::invalid_argument("unknown algebra name \"" + name +
                                 "\" for " + H->name + " (valid: " + valid +
                                 ")");
  };
  if (H->family == Family::H2n2) {
    if (name == "Aminus") return make_h2n2_module(H, 1, 0, -1);
    if (name == "Aplus") return make_h2n2_module(H, 1, 0, +1);
    if (H->param == 2) {
      if (name == "KP-a" || name == "KP-b") {
        CycNum gamma = CycNum::from_long(name == "KP-a" ? 1 : -1);
        ModuleAlgebra M = finish_two_gen(
            H, make_square_exchange_plane(gamma), label_pi_cyc(1, 0), name,
            name == "KP-a" ? "u^2 + v^2 = 0" : "u^2 - v^2 = 0");
        return M;
      }
      if (name == "KP-c") {
        ModuleAlgebra M = make_h2n2_module(H, 1, 0, -1);
        M.name = "KP-c";
        M.relation_desc = "v u + i u v = 0";
        return M;
      }
      if (name == "KP-d") {
        ModuleAlgebra M = make_h2n2_module(H, 1, 0, +1);
        M.name = "KP-d";
        M.relation_desc = "v u - i u v = 0";
        return M;
      }
    }
    throw bad_name();
  }
  if (H->family == Family::B4m) {
    if (name == "Aminus") return make_b4m_module(H, 1, -1);
    if (name == "Aplus") return make_b4m_module(H, 1, +1);
    throw bad_name();
  }
  if (H->family == Family::A4m) {
    if (H->param % 2 == 1) {
      if (name == "Aminus") return make_a4m_odd_module(H, 1, -1);
      if (name == "Aplus") return make_a4m_odd_module(H, 1, +1);
      throw bad_name();
    }
    for (int k = 1; k <= 5; ++k) {
      if (name == "A" + std::to_string(k) + "minus") {
        return make_a4m_even_module(H, k, 1, +1, -1);
      }
      if (name == "A" + std::to_string(k) + "plus") {
        return make_a4m_even_module(H, k, 1, +1, +1);
      }
    }
    throw bad_name();
  }
  throw bad_name();
}

std::vector<ModuleAlgebra> standard_actions(const HopfPtr& H) {
  std::vector<ModuleAlgebra> out;
  for (const std::string& n : standard_action_names(*H)) {
    out.push_back(make_standard_action(H, n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sufficient-condition Ore extension
// ---------------------------------------------------------------------------

ModuleAlgebra ore_extend(const ModuleAlgebra& M, const CycMatrix& sigma,
                         const RepLabel& t_label) {
  const HopfPresentation& H = *M.H;
  Representation trep = build_representation(M.H, t_label);
  if (trep.dim() != 1) {
    throw std::invalid_argument("ore_extend: t label must be one-dimensional");
  }
  size_t G = H.generator_count();
  bool trivial = true;
  for (size_t g = 0; g < G; ++g) {
    if (!(trep.gen_images[g].at(0, 0) == H.counit[g])) trivial = false;
  }
  for (size_t g = 0; g < G; ++g) {
    CycMatrix lhs = sigma * M.deg1.gen_images[g];
    CycMatrix rhs = M.deg1.gen_images[g] * sigma;
    if (lhs != rhs) {
      throw std::runtime_error(
          "extension condition fails: sigma is not H-linear for generator " +
          H.gen_names[g]);
    }
  }
  if (!trivial) {
    for (size_t g = 0; g < G; ++g) {
      LinComb lhs, rhs;
      for (const auto& [pair, c] :
           H.coproduct_of_word(Word{static_cast<int>(g)})) {
        lhs.add(pair.second, c * trep.word_image(pair.first).at(0, 0));
        rhs.add(pair.first, c * trep.word_image(pair.second).at(0, 0));
      }
      if (!(lhs == rhs)) {
        throw std::runtime_error(
            "extension condition fails: convolution identity fails for "
            "generator " +
            H.gen_names[g] + " with t label " + t_label.str());
      }
    }
  }
  ModuleAlgebra R;
  R.H = M.H;
  R.alg = make_ore_extension(M.alg, sigma);
  R.deg1 = direct_sum(M.deg1, trep);
  R.name = M.name + "[t]";
  R.relation_desc = M.relation_desc + "; t g = sigma(g) t";
  R.deg1_labels = M.deg1_labels;
  R.deg1_labels.push_back(t_label);
  R.inner_faithful = M.inner_faithful;
  std::string bad = relation_stability_violation(R);
  if (!bad.empty()) {
    throw std::runtime_error(
        "ore_extend: extended relations are not H-stable (generator " + bad +
        ")");
  }
  return R;
}

}  // namespace hopf
