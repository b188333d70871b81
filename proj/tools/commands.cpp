#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json_io.hpp"
#include "qlimits/bounds.hpp"
#include "qlimits/entropy.hpp"
#include "qlimits/noise.hpp"
#include "qlimits/transport.hpp"
#include "qlimits/verify.hpp"

namespace qlimits::tools {

const std::vector<double> kFigureBeta{0.6375, 0.5197, 0.4697, 0.4499, 0.4255, 0.4054,
                                      0.3832, 0.3603, 0.3358, 0.3092, 0.2807, 0.2501,
                                      0.2171, 0.1816, 0.1426, 0.1001, 0.0536};

namespace {

// Option storage for one leaf command. Map nodes are stable, so CLI11 can
// bind directly to them.
struct Params {
  std::map<std::string, double> real;
  std::map<std::string, int> integer;
  std::map<std::string, std::string> text;
  std::map<std::string, std::vector<double>> list;
  std::map<std::string, bool> flag;

  double r(const std::string& k) const { return real.at(k); }
  int i(const std::string& k) const { return integer.at(k); }

  Json echo() const {
    Json j = Json::object();
    for (const auto& [k, v] : real) j[k] = v;
    for (const auto& [k, v] : integer) j[k] = v;
    for (const auto& [k, v] : text) j[k] = v;
    for (const auto& [k, v] : list) j[k] = v;
    for (const auto& [k, v] : flag) j[k] = v;
    return j;
  }
};

using ParamsPtr = std::shared_ptr<Params>;

void real_opt(CLI::App* sub, const ParamsPtr& p, const std::string& name, const std::string& desc,
              std::optional<double> def = std::nullopt) {
  double& slot = p->real[name];
  auto* o = sub->add_option("--" + name, slot, desc);
  if (def) {
    slot = *def;
    o->capture_default_str();
  } else {
    o->required();
  }
}

void int_opt(CLI::App* sub, const ParamsPtr& p, const std::string& name, const std::string& desc,
             std::optional<int> def = std::nullopt) {
  int& slot = p->integer[name];
  auto* o = sub->add_option("--" + name, slot, desc);
  if (def) {
    slot = *def;
    o->capture_default_str();
  } else {
    o->required();
  }
}

void list_opt(CLI::App* sub, const ParamsPtr& p, const std::string& name, const std::string& desc,
              std::vector<double> def, bool required = false) {
  auto& slot = p->list[name];
  slot = std::move(def);
  auto* o = sub->add_option("--" + name, slot, desc)->delimiter(',');
  if (required) o->required();
}

void graph_params(CLI::App* sub, const ParamsPtr& p) {
  int_opt(sub, p, "D", "maximum degree of the interaction graph", 2);
  int_opt(sub, p, "delta", "spatial dimension", 1);
  real_opt(sub, p, "M", "sphere-growth constant", 2.0);
  real_opt(sub, p, "b", "maximum interaction strength", 1.0);
}

InteractionGraphParams graph_params_from(const Params& p) {
  InteractionGraphParams g;
  g.D = p.i("D");
  g.delta = p.i("delta");
  g.M = p.r("M");
  g.b = p.r("b");
  return g;
}

Json tail_json(const TailBound& t) {
  return Json{{"value", t.value}, {"raw", t.raw}, {"vacuous", t.vacuous}};
}

Json suite_json(const SuiteSummary& s) {
  Json j;
  j["cases"] = s.cases;
  j["violations"] = s.violations;
  j["worst_slack"] = s.worst_slack;
  j["notes"] = s.notes;
  return j;
}

BoundReport suite_report(const std::string& id, const std::string& anchor, const Params& p,
                         const SuiteSummary& s) {
  BoundReport r{id, anchor, p.echo()};
  r.values = suite_json(s);
  r.passed = s.passed();
  return r;
}

class Builder {
 public:
  explicit Builder(Application& a) : a_(a) {}

  // Registers a leaf command; `run` receives the parsed parameters and the
  // outcome to fill.
  template <class Run>
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& anchor,
                 const std::string& summary, const ParamsPtr& p, Run run) {
    a_.catalog.push_back({parent->get_name() + " " + name, anchor, summary});
    auto* sub = parent->add_subcommand(name, summary)->fallthrough();
    auto globals = a_.globals;
    auto outcome = a_.outcome;
    sub->callback([p, run, globals, outcome] { run(*p, *globals, *outcome); });
    return sub;
  }

 private:
  Application& a_;
};

void add_bound_commands(Builder& b, CLI::App* bound) {
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "maxcut-noisy", "maxcut.noisy.max_n",
                     "largest n for which noisy circuits can beat the expansion threshold", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       BoundReport r{"maxcut-noisy", "maxcut.noisy.max_n", p.echo()};
                       r.values["n_max"] = maxcut_noisy_max_n(p.r("p"));
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "p", "depolarizing probability");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "maxcut-depth", "maxcut.depth_lower_bound",
                     "depth needed by local circuits or QAOA to beat 5/6 on expanders", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto kind = p.text.at("kind") == "qaoa" ? CircuitKind::qaoa : CircuitKind::local;
                       auto d = maxcut_depth_bounds(p.r("n"), p.i("D"), kind);
                       BoundReport r{"maxcut-depth", "maxcut.depth_lower_bound", p.echo()};
                       r.values["depth"] = d.value;
                       if (kind == CircuitKind::qaoa)
                         r.values["n_for_depth_1"] = maxcut_qaoa_min_n(p.i("D"), 1);
                       r.log_base = d.log_base;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "n", "number of vertices");
    int_opt(s, p, "D", "graph degree", 3);
    p->text["kind"] = "local";
    s->add_option("--kind", p->text["kind"], "local or qaoa")
        ->check(CLI::IsMember({"local", "qaoa"}))
        ->capture_default_str();
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "approx-threshold", "maxcut.approximation_ratio",
                     "approximation ratio ruled out at depth below the light-cone bound", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto a = approx_threshold(p.i("D"));
                       BoundReport r{"approx-threshold", "maxcut.approximation_ratio", p.echo()};
                       r.values["ratio"] = a.value;
                       r.values["goemans_williamson"] = kGoemansWilliamson;
                       r.values["below_goemans_williamson"] = a.below_goemans_williamson;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "D", "graph degree");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "chebyshev", "poincare.chebyshev_tail",
                     "tail probability from a Poincare constant", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto t = chebyshev_tail(p.r("C"), p.i("n"), p.r("lipschitz"), p.r("r"));
                       BoundReport r{"chebyshev", "poincare.chebyshev_tail", p.echo()};
                       r.values["probability"] = tail_json(t);
                       r.vacuous = t.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "C", "Poincare constant");
    int_opt(s, p, "n", "number of qubits");
    real_opt(s, p, "lipschitz", "Lipschitz constant of the observable");
    real_opt(s, p, "r", "deviation");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "transport-variance", "poincare.transport_variance",
                     "W1 upper bound from KMS norms", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       BoundReport r{"transport-variance", "poincare.transport_variance", p.echo()};
                       r.values["w1_upper"] =
                           transport_variance_bound(p.r("C"), p.i("n"), p.r("kms1"), p.r("kms2"));
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "C", "Poincare constant");
    int_opt(s, p, "n", "number of qubits");
    real_opt(s, p, "kms1", "||X1 - I||_sigma");
    real_opt(s, p, "kms2", "||X2 - I||_sigma");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "transfer", "entropy.transfer_concentration",
                     "concentration transferred from a Gaussian fixed point through D_alpha", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       GaussianProfile prof{p.r("K"), p.r("c"), p.r("lipschitz")};
                       auto t = transfer_concentration(p.r("d-alpha"), p.r("alpha"), prof, p.r("a"),
                                                       p.i("n"), p.r("lipschitz"));
                       BoundReport r{"transfer", "entropy.transfer_concentration", p.echo()};
                       r.values["probability"] = tail_json(t);
                       r.log_base = "nats";
                       r.vacuous = t.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "d-alpha", "D_alpha(rho || sigma) in nats");
    real_opt(s, p, "alpha", "Renyi order", 2.0);
    real_opt(s, p, "K", "profile prefactor", 2.0);
    real_opt(s, p, "c", "profile exponent constant", 2.0);
    real_opt(s, p, "a", "deviation per qubit");
    int_opt(s, p, "n", "number of qubits");
    real_opt(s, p, "lipschitz", "dressed Lipschitz constant", 1.0);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "depol-tail", "entropy.depolarizing_tail",
                     "energy concentration after depolarizing circuits", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto t = depol_tail(p.r("p"), p.i("L"), p.r("epsilon"), p.i("n"),
                                           p.r("lipschitz"));
                       BoundReport r{"depol-tail", "entropy.depolarizing_tail", p.echo()};
                       r.values["level"] = t.level;
                       r.values["probability"] = tail_json(t.probability);
                       r.vacuous = t.probability.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "p", "depolarizing probability");
    int_opt(s, p, "L", "circuit depth");
    real_opt(s, p, "epsilon", "slack");
    int_opt(s, p, "n", "number of qubits");
    real_opt(s, p, "lipschitz", "Lipschitz constant of H", 1.0);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "advantage-depth", "entropy.advantage_depth",
                     "depth beyond which depolarizing circuits lose a target advantage", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto a = advantage_depth(p.r("ac"), p.r("p"));
                       BoundReport r{"advantage-depth", "entropy.advantage_depth", p.echo()};
                       r.values["depth"] = a.value;
                       r.values["smallest_integer_depth"] = a.depth;
                       r.values["exact_check"] = a.exact_check;
                       r.log_base = "nats";
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "ac", "target advantage a_c");
    real_opt(s, p, "p", "depolarizing probability");
  }
  for (const std::string kind : {"anneal-time", "ghz-time"}) {
    auto p = std::make_shared<Params>();
    const bool anneal = kind == "anneal-time";
    const std::string anchor = anneal ? "continuous.anneal_time" : "continuous.ghz_time";
    auto* s = b.leaf(bound, kind, anchor,
                     anneal ? "minimal annealing time to reach good Max-Cut energies"
                            : "minimal evolution time to prepare a GHZ state",
                     p, [anneal, kind, anchor](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto g = graph_params_from(p);
                       auto t = anneal ? anneal_time_lower(p.r("n"), g) : ghz_time_lower(p.r("n"), g);
                       auto c = continuous_constants(g);
                       BoundReport r{kind, anchor, p.echo()};
                       r.values["time"] = t.value;
                       r.values["log_argument"] = t.log_argument;
                       r.values["c0"] = c.c0;
                       r.values["c1"] = c.c1;
                       r.values["velocity"] = g.velocity();
                       r.log_base = "nats";
                       r.vacuous = t.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "n", "number of qubits");
    graph_params(s, p);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "lieb-robinson", "continuous.lieb_robinson",
                     "Lieb-Robinson tail for a region at distance k0", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto g = graph_params_from(p);
                       BoundReport r{"lieb-robinson", "continuous.lieb_robinson", p.echo()};
                       double v = lr_bound(g, p.r("t"), p.i("k0"));
                       r.values["bound"] = v;
                       r.values["velocity"] = g.velocity();
                       r.vacuous = v >= 2.0;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "t", "evolution time");
    int_opt(s, p, "k0", "distance from A to the complement of B");
    graph_params(s, p);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "regular-graph", "regular_graph.entropy_threshold",
                     "entropy density below which noisy QAOA cannot beat the classical energy", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto t = regular_graph_threshold(p.r("q"), p.i("D"), p.r("n"), p.r("epsilon"));
                       BoundReport r{"regular-graph", "regular_graph.entropy_threshold", p.echo()};
                       r.values["threshold"] = t.threshold;
                       r.values["threshold_density"] = t.threshold_density;
                       r.values["mean_energy"] = t.mean_energy;
                       r.values["classical_energy"] = t.classical_energy;
                       r.values["tail"] = tail_json(t.tail);
                       r.log_base = "nats";
                       r.vacuous = t.tail.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "q", "fixed-point parameter");
    int_opt(s, p, "D", "graph degree");
    real_opt(s, p, "n", "number of vertices", 1.0);
    real_opt(s, p, "epsilon", "slack", 0.0);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(
        bound, "mitigation", "mitigation.concentration",
        "concentration of weak error-mitigation estimators", p,
        [](const Params& p, const GlobalOptions&, Outcome& o) {
          MitigationInput in;
          if (p.flag.at("min-of-m")) {
            in = MitigationInput::min_of_m(p.i("m"), p.r("c"), p.r("l0"), p.r("r"), p.r("epsilon"),
                                           p.i("n"), p.list.at("d2"));
          } else {
            in.m = p.i("m");
            in.K = p.r("K");
            in.L_f = p.r("Lf");
            in.c = p.r("c");
            in.l0 = p.r("l0");
            in.r = p.r("r");
            in.epsilon = p.r("epsilon");
            in.n = p.i("n");
            in.copy_d2 = p.list.at("d2");
          }
          auto m = mitigation_concentration(in);
          BoundReport r{"mitigation", "mitigation.concentration", p.echo()};
          r.values["applicable"] = m.applicable;
          r.values["precondition_lhs"] = m.precondition_lhs;
          r.values["precondition_rhs"] = m.precondition_rhs;
          r.values["deviation"] = m.deviation;
          r.values["stated_value"] = m.stated_value;
          r.log_base = "nats";
          if (m.applicable) {
            r.values["probability"] = tail_json(m.bound);
            r.vacuous = m.bound.vacuous;
          } else {
            r.values["reason"] = m.reason;
            o.exit_code = kPreconditionViolated;
          }
          o.reports.push_back(r);
        });
    int_opt(s, p, "m", "number of copies");
    real_opt(s, p, "K", "K(m)", 1.0);
    real_opt(s, p, "Lf", "Lipschitz constant of the estimator", 1.0);
    real_opt(s, p, "c", "profile exponent constant", 2.0);
    real_opt(s, p, "l0", "dressed Lipschitz constant", 1.0);
    real_opt(s, p, "r", "deviation per qubit");
    real_opt(s, p, "epsilon", "slack");
    int_opt(s, p, "n", "number of qubits");
    list_opt(s, p, "d2", "per-copy D_2 values in nats", {}, true);
    p->flag["min-of-m"] = false;
    s->add_flag("--min-of-m", p->flag["min-of-m"], "use K(m) = m and L_f = 1");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "annealer-tail", "annealer.energy_tail",
                     "energy concentration of the noisy linear-schedule annealer", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto t = noisy_annealer_tail(p.r("q"), p.r("T"), p.r("epsilon"), p.i("n"),
                                                    p.r("lipschitz"), p.r("mean"));
                       BoundReport r{"annealer-tail", "annealer.energy_tail", p.echo()};
                       r.values["h"] = t.h;
                       r.values["level"] = t.level;
                       r.values["probability"] = tail_json(t.probability);
                       r.log_base = "nats";
                       r.vacuous = t.probability.vacuous;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "q", "fixed-point parameter");
    real_opt(s, p, "T", "annealing time");
    real_opt(s, p, "epsilon", "slack");
    int_opt(s, p, "n", "number of qubits");
    real_opt(s, p, "lipschitz", "Lipschitz constant of H_I", 1.0);
    real_opt(s, p, "mean", "tr[tau_q^n H_I]", 0.0);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "annealer-entropy", "annealer.entropy_decay",
                     "D_2 bound for the noisy linear-schedule annealer", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       double h = h_of_T(p.r("q"), p.r("T"));
                       BoundReport r{"annealer-entropy", "annealer.entropy_decay", p.echo()};
                       r.values["rate"] = annealer_rate(p.r("q"));
                       r.values["h"] = h;
                       r.values["d2_bound"] = h * p.i("n");
                       r.values["d2_initial"] = d2_plus_state(p.r("q"), p.i("n"));
                       r.log_base = "nats";
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "q", "fixed-point parameter");
    real_opt(s, p, "T", "annealing time");
    int_opt(s, p, "n", "number of qubits", 1);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "purity", "purity.depolarizing",
                     "success probability of virtual distillation after depolarizing circuits", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       BoundReport r{"purity", "purity.depolarizing", p.echo()};
                       r.values["purity_bound"] = purity_decay_depolarizing(p.r("p"), p.i("L"), p.i("n"));
                       r.log_base = "bits";
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "p", "depolarizing probability");
    int_opt(s, p, "L", "circuit depth");
    int_opt(s, p, "n", "number of qubits");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "purity-nonunital", "purity.nonunital",
                     "purity bound from D_2 to a product fixed point", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       BoundReport r{"purity-nonunital", "purity.nonunital", p.echo()};
                       r.values["purity_bound"] = purity_bound_from_entropy(p.r("d2"), p.r("q"), p.i("n"));
                       r.log_base = "bits";
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "d2", "D_2(rho || tau_q^n) in nats");
    real_opt(s, p, "q", "fixed-point parameter");
    int_opt(s, p, "n", "number of qubits");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "poincare-continuous", "poincare.continuous",
                     "Poincare constant of short-time local Hamiltonian evolution", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto g = graph_params_from(p);
                       auto c = poincare_continuous_simple(g, p.r("t"));
                       BoundReport r{"poincare-continuous", "poincare.continuous", p.echo()};
                       r.values["constant"] = c.value;
                       if (p.i("chain") > 0)
                         r.values["constant_exact_chain"] =
                             poincare_continuous_exact(g, p.r("t"), distance_table(path_graph(p.i("chain")), 0))
                                 .value;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "t", "evolution time");
    int_opt(s, p, "chain", "also evaluate the distance-sum form on a path of this length", 0);
    graph_params(s, p);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "sdpi", "entropy.sdpi",
                     "largest SDPI parameter of generalized amplitude damping", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       double q = p.r("q");
                       auto res = sdpi_max_p(kraus_map(generalized_amplitude_damping(q, p.r("gamma"))),
                                             tau_matrix(q));
                       BoundReport r{"sdpi", "entropy.sdpi", p.echo()};
                       r.values["p_star"] = res.p_star;
                       r.values["discrete_factor"] = res.discrete_factor;
                       r.values["norm_at_p_star"] = res.norm_at_p;
                       r.values["norm_above"] = res.norm_above;
                       r.log_base = "nats";
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "q", "fixed-point parameter");
    real_opt(s, p, "gamma", "damping strength");
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(bound, "qaoa-entropy", "entropy.qaoa_decay",
                     "layer-by-layer D_2 bound for noisy QAOA", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto led = qaoa_entropy_bound(p.list.at("beta"), p.r("q"), p.r("contraction"),
                                                     p.i("n"));
                       BoundReport r{"qaoa-entropy", "entropy.qaoa_decay", p.echo()};
                       r.values["initial"] = led.initial;
                       Json layers = Json::array();
                       for (const auto& e : led.entries)
                         layers.push_back({{"layer", e.layer}, {"penalty", e.penalty}, {"bound", e.bound}});
                       r.values["layers"] = layers;
                       r.values["bound"] = led.bound();
                       r.values["density"] = led.bound() / p.i("n");
                       r.log_base = "nats";
                       o.reports.push_back(r);
                     });
    list_opt(s, p, "beta", "mixer angles", kFigureBeta);
    real_opt(s, p, "q", "fixed-point parameter");
    real_opt(s, p, "contraction", "per-layer contraction q_alpha");
    int_opt(s, p, "n", "number of qubits", 1);
  }
}

void add_verify_commands(Builder& b, CLI::App* verify) {
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "poincare", "poincare.noiseless.variance",
                     "variance and symmetric concentration on random brickwork outputs", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       PoincareSuiteOptions opt;
                       opt.n = p.i("n");
                       opt.max_depth = p.i("depth");
                       opt.circuits = p.i("circuits");
                       opt.observables = p.i("observables");
                       opt.set_pairs = p.i("pairs");
                       opt.seed = g.seed;
                       auto res = poincare_suite(opt);
                       BoundReport r{"verify-poincare", "poincare.noiseless.variance", p.echo()};
                       r.inputs["seed"] = g.seed;
                       r.values["variance"] = suite_json(res.variance);
                       r.values["concentration"] = suite_json(res.concentration);
                       r.values["ghz_n"] = res.ghz_n;
                       r.values["ghz_rhs"] = res.ghz_rhs;
                       r.values["ghz_rejected"] = res.ghz_rejected;
                       r.passed = res.variance.passed() && res.concentration.passed() && res.ghz_rejected;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "n", "number of qubits", 8);
    int_opt(s, p, "depth", "maximum circuit depth", 3);
    int_opt(s, p, "circuits", "random circuits", 20);
    int_opt(s, p, "observables", "random observables per circuit", 50);
    int_opt(s, p, "pairs", "random set pairs per circuit", 100);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "depolarizing-decay", "entropy.depolarizing_decay",
                     "D_2 decay under depolarizing noise on random circuits", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       DecaySuiteOptions opt;
                       opt.cases = p.i("cases");
                       opt.seed = g.seed;
                       auto r = suite_report("verify-depolarizing-decay", "entropy.depolarizing_decay", p,
                                             depolarizing_decay_suite(opt));
                       r.inputs["seed"] = g.seed;
                       r.log_base = "nats";
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "cases", "number of random circuits", 30);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "purity", "purity.depolarizing.check",
                     "purity of noisy random circuits against the decay bound", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       PuritySuiteOptions opt;
                       opt.n = p.i("n");
                       opt.p = p.r("p");
                       opt.max_depth = p.i("depth");
                       opt.seed = g.seed;
                       auto r = suite_report("verify-purity", "purity.depolarizing.check", p, purity_suite(opt));
                       r.inputs["seed"] = g.seed;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "n", "number of qubits", 6);
    real_opt(s, p, "p", "depolarizing probability", 0.2);
    int_opt(s, p, "depth", "maximum depth", 4);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "transfer", "entropy.transfer_concentration.check",
                     "transfer inequality on random states and projectors", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       TransferSuiteOptions opt;
                       opt.triples = p.i("triples");
                       opt.seed = g.seed;
                       auto r = suite_report("verify-transfer", "entropy.transfer_concentration.check", p,
                                             transfer_suite(opt));
                       r.inputs["seed"] = g.seed;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "triples", "random (rho, sigma, E) triples", 200);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "w1", "transport.w1_classical",
                     "classical W1 primal/dual agreement and triangle inequality", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       W1SuiteOptions opt;
                       opt.pairs = p.i("pairs");
                       opt.seed = g.seed;
                       auto res = w1_suite(opt);
                       BoundReport r{"verify-w1", "transport.w1_classical", p.echo()};
                       r.inputs["seed"] = g.seed;
                       r.values["duality"] = suite_json(res.duality);
                       r.values["triangle"] = suite_json(res.triangle);
                       r.passed = res.duality.passed() && res.triangle.passed();
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "pairs", "random distribution pairs", 100);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "w1-quantum", "transport.w1_quantum",
                     "bracket the quantum W1 distance of two states given as JSON files", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       auto rho = state_from_json(read_json_file(p.text.at("rho")));
                       auto sigma = state_from_json(read_json_file(p.text.at("sigma")));
                       W1Options opt;
                       opt.seed = g.seed;
                       auto res = w1_quantum_bounds(rho, sigma, opt);
                       BoundReport r{"verify-w1-quantum", "transport.w1_quantum", p.echo()};
                       r.values["lower"] = res.lower;
                       r.values["upper"] = res.upper;
                       r.values["witness"] = res.lower_witness;
                       if (res.classical_exact) r.values["classical_exact"] = *res.classical_exact;
                       r.passed = res.lower <= res.upper + 1e-9;
                       o.reports.push_back(r);
                     });
    s->add_option("--rho", p->text["rho"], "state file")->required()->check(CLI::ExistingFile);
    s->add_option("--sigma", p->text["sigma"], "state file")->required()->check(CLI::ExistingFile);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "annealer", "annealer.entropy_decay.check",
                     "simulated noisy annealer against the D_2 decay bound", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       AnnealerSuiteOptions opt;
                       opt.q = p.r("q");
                       opt.n = p.i("n");
                       opt.times = p.list.at("T");
                       auto res = annealer_suite(opt);
                       BoundReport r{"verify-annealer", "annealer.entropy_decay.check", p.echo()};
                       r.values["entropy"] = suite_json(res.entropy);
                       r.values["worst_halving"] = res.worst_halving;
                       r.log_base = "nats";
                       r.passed = res.entropy.passed() && res.halving_ok;
                       o.reports.push_back(r);
                     });
    real_opt(s, p, "q", "fixed-point parameter", 0.4);
    int_opt(s, p, "n", "number of qubits", 3);
    list_opt(s, p, "T", "annealing times", {2.0, 5.0, 10.0});
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "lieb-robinson", "continuous.lieb_robinson.check",
                     "XX chain discrepancy against the Lieb-Robinson tail", p,
                     [](const Params& p, const GlobalOptions& g, Outcome& o) {
                       LiebRobinsonSuiteOptions opt;
                       opt.n = p.i("n");
                       opt.seed = g.seed;
                       auto r = suite_report("verify-lieb-robinson", "continuous.lieb_robinson.check", p,
                                             lieb_robinson_suite(opt));
                       r.inputs["seed"] = g.seed;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "n", "chain length", 7);
  }
  {
    auto p = std::make_shared<Params>();
    auto* s = b.leaf(verify, "symmetry", "maxcut.symmetry",
                     "ball probabilities of optimised QAOA on K_{3,3}", p,
                     [](const Params& p, const GlobalOptions&, Outcome& o) {
                       auto run = symmetry_k33(p.i("P"), p.i("points"));
                       const auto& rep = run.report;
                       BoundReport r{"verify-symmetry", "maxcut.symmetry", p.echo()};
                       r.values["gamma"] = run.optimum.gamma;
                       r.values["beta"] = run.optimum.beta;
                       r.values["grid_energy"] = run.optimum.grid_energy;
                       r.values["energy"] = rep.energy;
                       r.values["energy_threshold"] = rep.energy_threshold;
                       r.values["p_opt"] = rep.p_opt;
                       r.values["p_bar"] = rep.p_bar;
                       r.values["equal"] = rep.equal;
                       r.values["at_least_quarter"] = rep.at_least_quarter;
                       r.values["failed_preconditions"] = rep.failed_preconditions;
                       r.passed = rep.passed;
                       o.reports.push_back(r);
                     });
    int_opt(s, p, "P", "QAOA depth", 2);
    int_opt(s, p, "points", "grid points per angle", 16);
  }
}

void add_figure_commands(Builder& b, CLI::App* figure) {
  auto p = std::make_shared<Params>();
  auto* s = b.leaf(figure, "qaoa-entropy", "regular_graph.entropy_figure",
                   "entropy density of noisy QAOA vs contraction, with the regular-graph threshold", p,
                   [](const Params& p, const GlobalOptions&, Outcome& o) {
                     std::vector<double> beta = p.list.at("beta");
                     if (beta.empty()) {
                       if (p.i("P") != static_cast<int>(kFigureBeta.size()))
                         throw CLI::ValidationError("--beta", "no default angles for this P");
                       beta = kFigureBeta;
                     }
                     if (static_cast<int>(beta.size()) != p.i("P"))
                       throw CLI::ValidationError("--beta", "expected P mixer angles");
                     o.csv = qaoa_entropy_csv(beta, p.list.at("q"),
                                              parse_grid(p.text.at("contraction-grid")), p.i("D"));
                   });
  int_opt(s, p, "P", "QAOA depth", 17);
  list_opt(s, p, "beta", "mixer angles (defaults to the depth-17 set)", {});
  list_opt(s, p, "q", "fixed-point parameters", {0.35, 0.4, 0.45, 0.5});
  p->text["contraction-grid"] = "0:0.5:0.01";
  s->add_option("--contraction-grid", p->text["contraction-grid"], "start:stop:step")
      ->capture_default_str();
  int_opt(s, p, "D", "degree for the threshold line", 50);
}

void emit(const Outcome& outcome, const GlobalOptions& g) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw SchemaError("cannot write " + g.out);
    out = &file;
  }
  if (!outcome.csv.empty()) {
    *out << outcome.csv;
    return;
  }
  Format f = g.format == "csv" ? Format::csv : Format::json;
  for (const auto& r : outcome.reports) write_report(*out, r, f);
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw SchemaError("grid must be start:stop:step");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
    throw SchemaError("grid must be start:stop:step with step > 0 and stop >= start");
  const long count = std::lround((parts[1] - parts[0]) / parts[2]);
  std::vector<double> grid;
  for (long k = 0; k <= count; ++k) grid.push_back(parts[0] + k * parts[2]);
  return grid;
}

std::string qaoa_entropy_csv(const std::vector<double>& beta, const std::vector<double>& qs,
                             const std::vector<double>& contractions, int degree) {
  auto num = [](double x) { return Json(x).dump(); };
  std::ostringstream out;
  out << "q,contraction,entropy_density,threshold_density,below_threshold\n";
  for (double q : qs) {
    double threshold = regular_graph_threshold(q, degree, 1.0, 0.0).threshold_density;
    for (double c : contractions) {
      double density = qaoa_entropy_bound(beta, q, c, 1).bound();
      out << num(q) << ',' << num(c) << ',' << num(density) << ',' << num(threshold) << ','
          << (density < threshold ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

Application make_application() {
  Application a;
  a.app = std::make_unique<CLI::App>("Limits of noisy quantum optimisation: bound calculators and "
                                     "verification suites",
                                     "qlimits");
  a.globals = std::make_shared<GlobalOptions>();
  a.outcome = std::make_shared<Outcome>();
  auto& app = *a.app;
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--seed", a.globals->seed, "random seed")->capture_default_str();
  app.add_option("--out", a.globals->out, "output file (default stdout)");
  app.add_option("--format", a.globals->format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  Builder b(a);
  auto* bound = app.add_subcommand("bound", "evaluate a bound calculator")->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run a randomized verification suite")->require_subcommand(1);
  auto* figure = app.add_subcommand("figure", "emit curve data as CSV")->require_subcommand(1);
  add_bound_commands(b, bound);
  add_verify_commands(b, verify);
  add_figure_commands(b, figure);
  for (auto* group : {bound, verify, figure}) group->fallthrough();

  auto* list = app.add_subcommand("list", "print every command with its anchor");
  auto catalog = std::make_shared<std::vector<CatalogEntry>>(a.catalog);
  list->callback([catalog] {
    for (const auto& e : *catalog) std::cout << e.command << '\t' << e.anchor << '\t' << e.summary << '\n';
  });

  auto config = std::make_shared<std::string>();
  auto* run = app.add_subcommand("run", "execute a JSON job config");
  run->add_option("--config", *config, "job config file")->required();
  auto outcome = a.outcome;
  run->callback([config, outcome] {
    outcome->exit_code = dispatch(job_arguments(read_json_file(*config)));
  });
  return a;
}

std::vector<std::string> job_arguments(const Json& config) {
  if (!config.is_object()) throw SchemaError("/: job config must be an object");
  for (const auto& [k, v] : config.items())
    if (k != "command" && k != "parameters" && k != "seed" && k != "out" && k != "format")
      throw SchemaError("/" + k + ": unknown field");
  if (!config.contains("command") || !config["command"].is_string())
    throw SchemaError("/command: required string");

  std::vector<std::string> args;
  std::stringstream ss(config["command"].get<std::string>());
  for (std::string tok; ss >> tok;) args.push_back(tok);

  Application probe = make_application();
  if (args.size() != 2) throw SchemaError("/command: expected '<group> <name>'");
  bool known = false;
  for (const auto& e : probe.catalog) known = known || e.command == args[0] + " " + args[1];
  if (!known) throw SchemaError("/command: unknown command '" + args[0] + " " + args[1] + "'");
  CLI::App* leaf = probe.app->get_subcommand(args[0])->get_subcommand(args[1]);

  if (config.contains("parameters")) {
    const Json& params = config["parameters"];
    if (!params.is_object()) throw SchemaError("/parameters: must be an object");
    for (const auto& [k, v] : params.items()) {
      const std::string pointer = "/parameters/" + k;
      if (leaf->get_option_no_throw("--" + k) == nullptr)
        throw SchemaError(pointer + ": not an option of " + config["command"].get<std::string>());
      if (v.is_boolean()) {
        if (v.get<bool>()) args.push_back("--" + k);
      } else if (v.is_number() || v.is_string()) {
        args.push_back("--" + k);
        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      } else if (v.is_array()) {
        std::string joined;
        for (const auto& x : v) {
          if (!x.is_number()) throw SchemaError(pointer + ": arrays must hold numbers");
          joined += (joined.empty() ? "" : ",") + x.dump();
        }
        args.push_back("--" + k);
        args.push_back(joined);
      } else {
        throw SchemaError(pointer + ": unsupported value type");
      }
    }
  }
  std::vector<std::string> globals;
  if (config.contains("seed")) {
    if (!config["seed"].is_number_unsigned()) throw SchemaError("/seed: non-negative integer");
    globals.insert(globals.end(), {"--seed", config["seed"].dump()});
  }
  if (config.contains("out")) {
    if (!config["out"].is_string()) throw SchemaError("/out: must be a string");
    globals.insert(globals.end(), {"--out", config["out"].get<std::string>()});
  }
  if (config.contains("format")) {
    const Json& f = config["format"];
    if (!f.is_string() || (f != "json" && f != "csv")) throw SchemaError("/format: json or csv");
    globals.insert(globals.end(), {"--format", f.get<std::string>()});
  }
  globals.insert(globals.end(), args.begin(), args.end());
  return globals;
}

int dispatch(const std::vector<std::string>& args) {
  Application a = make_application();
  std::vector<std::string> argv_store{"qlimits"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    a.app->parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return a.app->exit(e);
  } catch (const CLI::ParseError& e) {
    a.app->exit(e);
    return kSchemaError;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const std::exception& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPreconditionViolated;
  }
  if (!a.outcome->reports.empty() || !a.outcome->csv.empty()) emit(*a.outcome, *a.globals);
  int code = a.outcome->exit_code;
  if (code == kSuccess)
    for (const auto& r : a.outcome->reports)
      if (r.passed && !*r.passed) code = kVerificationFailed;
  return code;
}

}  // namespace qlimits::tools
