#include "cmpoly/jets/jet_sequence.hpp"

#include <map>
#include <mutex>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"

namespace cmpoly::jets {

struct JetSequence::State {
  std::string name;
  QMatrix metric;
  bool positive_definite = true;
  Source source = Source::explicit_list;

  std::vector<PolyMatrix> given;
  std::optional<lie::LiePresentation> pres;
  std::optional<lie::ConnectionMap> conn;
  std::shared_ptr<const lie::CurvatureTensor> tensor;
  PolyMatrix generator_c;

  std::mutex mutex;
  std::map<int, PolyMatrix> cache;  // node-based: references survive inserts
};

namespace {

void check_metric(const QMatrix& g, std::size_t dim) {
  if (g.rows() != dim || g.cols() != dim) throw UsageError("metric has wrong shape");
  if (!g.is_symmetric()) throw UsageError("metric is not symmetric");
  if (is_zero(determinant(g))) throw UsageError("degenerate metric");
}

}  // namespace

JetSequence JetSequence::from_list(std::string name, QMatrix metric, std::vector<PolyMatrix> jets,
                                   bool positive_definite) {
  if (jets.empty()) throw UsageError("explicit jet list is empty");
  const std::size_t n = jets.front().dim();
  check_metric(metric, n);
  if (positive_definite && !is_positive_definite(metric)) throw UsageError("metric is not positive definite");
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (jets[k].dim() != n || jets[k].num_vars() != n) throw UsageError("jet " + std::to_string(k) + " has wrong shape");
    jets[k].set_declared_degree(static_cast<int>(k) + 2);
  }
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->metric = std::move(metric);
  s->positive_definite = positive_definite;
  s->source = Source::explicit_list;
  s->given = std::move(jets);
  return JetSequence(std::move(s));
}

JetSequence JetSequence::from_lie(const lie::LiePresentation& pres) {
  auto s = std::make_shared<State>();
  s->name = pres.name();
  s->metric = pres.metric();
  s->positive_definite = pres.positive_definite();
  s->source = Source::lie_group;
  s->pres = pres;
  s->conn = lie::koszul(pres);
  s->tensor = std::make_shared<const lie::CurvatureTensor>(lie::curvature_derivatives(pres, *s->conn, 0));
  return JetSequence(std::move(s));
}

JetSequence JetSequence::from_generator(std::string name, QMatrix metric, C0Generator gen, bool positive_definite) {
  const std::size_t n = gen.r0.dim();
  check_metric(metric, n);
  if (positive_definite && !is_positive_definite(metric)) throw UsageError("metric is not positive definite");
  if (gen.c.dim() != n || gen.c.num_vars() != n || gen.r0.num_vars() != n) {
    throw UsageError("generator matrices have wrong shape");
  }
  gen.r0.set_declared_degree(2);
  gen.c.set_declared_degree(1);
  if (gen.skew_checked) {
    const PolyMatrix g = PolyMatrix::constant(metric, n);
    const PolyMatrix gc = g * gen.c;
    if (!(gc + gc.transpose()).is_zero()) throw UsageError("generator C is not skew with respect to the metric");
  }
  auto s = std::make_shared<State>();
  s->name = std::move(name);
  s->metric = std::move(metric);
  s->positive_definite = positive_definite;
  s->source = Source::c0_generator;
  s->given.push_back(std::move(gen.r0));
  s->generator_c = std::move(gen.c);
  return JetSequence(std::move(s));
}

const std::string& JetSequence::name() const { return state_->name; }
std::size_t JetSequence::dim() const { return state_->metric.rows(); }
const QMatrix& JetSequence::metric() const { return state_->metric; }
bool JetSequence::positive_definite() const { return state_->positive_definite; }
JetSequence::Source JetSequence::source() const { return state_->source; }

std::optional<int> JetSequence::available_orders() const {
  if (state_->source == Source::explicit_list) return static_cast<int>(state_->given.size());
  return std::nullopt;
}

const lie::LiePresentation* JetSequence::presentation() const {
  return state_->pres ? &*state_->pres : nullptr;
}

const lie::ConnectionMap* JetSequence::connection() const {
  return state_->conn ? &*state_->conn : nullptr;
}

namespace {

void ensure_order(std::shared_ptr<const lie::CurvatureTensor>& tensor, const lie::ConnectionMap& conn, int order) {
  if (tensor->max_order() >= order) return;
  tensor = std::make_shared<const lie::CurvatureTensor>(lie::extend_curvature(*tensor, conn, order));
}

}  // namespace

std::shared_ptr<const lie::CurvatureTensor> JetSequence::curvature(int order) const {
  State& s = *state_;
  if (s.source != Source::lie_group) throw UsageError("curvature components need a Lie-backed sequence");
  std::lock_guard lock(s.mutex);
  ensure_order(s.tensor, *s.conn, order);
  return s.tensor;
}

const PolyMatrix& JetSequence::jet(int k) const {
  if (k < 0) throw UsageError("negative jet order");
  State& s = *state_;
  if (s.source == Source::explicit_list) {
    if (static_cast<std::size_t>(k) >= s.given.size()) {
      throw UsageError("jet order unavailable: " + std::to_string(k) + " (list has " +
                       std::to_string(s.given.size()) + ")");
    }
    return s.given[static_cast<std::size_t>(k)];
  }
  if (s.source == Source::c0_generator && k == 0) return s.given.front();

  std::lock_guard lock(s.mutex);
  if (auto it = s.cache.find(k); it != s.cache.end()) return it->second;
  if (s.source == Source::lie_group) {
    ensure_order(s.tensor, *s.conn, k);
    return s.cache.emplace(k, lie::symmetrized_jet(*s.tensor, k)).first->second;
  }
  // Generator: fill every missing order up to k from the highest cached one.
  int have = 0;
  const PolyMatrix* prev = &s.given.front();
  for (int j = k - 1; j >= 1; --j) {
    if (auto it = s.cache.find(j); it != s.cache.end()) {
      have = j;
      prev = &it->second;
      break;
    }
  }
  for (int j = have + 1; j <= k; ++j) {
    PolyMatrix next = commutator(s.generator_c, *prev);
    next.set_declared_degree(j + 2);
    prev = &s.cache.emplace(j, std::move(next)).first->second;
  }
  return *prev;
}

const PolyMatrix& get_jet(const JetSequence& seq, int k) { return seq.jet(k); }

}  // namespace cmpoly::jets
