#include "polyadica/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "polyadica/arity_shape.hpp"
#include "polyadica/congruence.hpp"
#include "polyadica/diophantine.hpp"
#include "polyadica/error.hpp"
#include "polyadica/json_io.hpp"
#include "polyadica/solution_store.hpp"
#include "polyadica/tarry_escott.hpp"

namespace polyadica {

namespace {

using json::Json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void emit(Io& io, const Json& j) { io.out << j.dump() << '\n'; }

// Shape results: the value as JSON, or the structured error with its exit code.
template <class T, class F>
int emit_shape(Io& io, const shape::ShapeResult<T>& r, F&& to_json) {
  if (r.ok()) {
    emit(io, to_json(*r));
    return kOk;
  }
  emit(io, json::to_json(r.error()));
  return r.error().kind == shape::ShapeFailure::kInvalidArgument ? kUsage : kDomainFailure;
}

Json lshape_json(const shape::LShape& s) {
  Json j;
  j["ell_mu"] = s.ell_mu;
  j["ell_id"] = s.ell_id;
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

shape::SpaceComponent parse_component(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse, "component must be 'm_V,k_rho', got '" + text + "'");
  }
}

struct RingOptions {
  std::string kind = "exotic32";
  std::int64_t a = 0;
  std::int64_t b = 0;

  void add_to(CLI::App* app) {
    app->add_option("--ring", kind, "exotic32 | finite34 | binaryZ | congruence")->capture_default_str();
    app->add_option("--a", a, "residue of the congruence class");
    app->add_option("--b", b, "modulus of the congruence class");
  }
  RingDescriptor descriptor() const {
    RingDescriptor d;
    d.kind = parse_ring_kind(kind);
    if (d.kind == RingKind::kCongruence) {
      d.a = a;
      d.b = b;
    }
    return d;
  }
};

Json class_json(const congruence::CongruenceClass& c) {
  Json j;
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : io_{out, err} {
    app_.require_subcommand(1);
    app_.set_version_flag("--version", "polyadica 1.0.0");
    add_shape();
    add_quantize();
    add_class_table();
    add_class_info();
    add_lps_table();
    add_search();
    add_verify();
    add_identities();
    add_te_gen();
    add_frolov();
    add_te_pipeline();
  }

  int run(const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      io_.out << app_.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      io_.out << app_.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::CallForVersion& e) {
      io_.out << e.what() << '\n';
      return kOk;
    } catch (const CLI::ParseError& e) {
      io_.err << "error: " << e.what() << '\n';
      return kUsage;
    }
    for (auto& [cmd, handler] : handlers_) {
      if (!cmd->parsed()) continue;
      try {
        return handler();
      } catch (const Error& e) {
        io_.err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        const bool usage = e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kParse;
        return usage ? kUsage : kDomainFailure;
      }
    }
    io_.err << app_.help();
    return kUsage;
  }

 private:
  CLI::App* command(CLI::App* parent, const std::string& name, const std::string& desc,
                    std::function<int()> handler) {
    auto* sub = parent->add_subcommand(name, desc);
    handlers_.emplace_back(sub, std::move(handler));
    return sub;
  }

  static void arity(CLI::App* app, const std::string& flag, int& target, const std::string& desc) {
    app->add_option(flag, target, desc)->required()->check(CLI::Range(shape::kMinArity, shape::kMaxArity));
  }
  static void places(CLI::App* app, const std::string& flag, int& target, const std::string& desc) {
    app->add_option(flag, target, desc)->required()->check(CLI::Range(1, shape::kMaxPlaces));
  }

  void add_shape() {
    auto* shape_cmd = app_.add_subcommand("shape", "arity-shape queries");
    shape_cmd->require_subcommand(1);

    auto* vs = command(shape_cmd, "vector-space", "composition shape of the multiaction", [this] {
      return emit_shape(io_, shape::composition_shape(s_.n_K, s_.k_rho, s_.n_rho), lshape_json);
    });
    arity(vs, "--nK", s_.n_K, "field multiplication arity");
    places(vs, "--krho", s_.k_rho, "places of the multiaction");
    arity(vs, "--nrho", s_.n_rho, "arity of the multiaction semigroup");

    auto* dis = command(shape_cmd, "distributivity", "shape against the field addition", [this] {
      return emit_shape(io_, shape::distributivity_shape(s_.m_K, s_.k_rho, s_.n_rho), lshape_json);
    });
    arity(dis, "--mK", s_.m_K, "field addition arity");
    places(dis, "--krho", s_.k_rho, "places of the multiaction");
    arity(dis, "--nrho", s_.n_rho, "arity of the multiaction semigroup");

    auto* alg = command(shape_cmd, "algebra", "algebra compatibility shape", [this] {
      return emit_shape(io_, shape::algebra_compat_shape(s_.n_K, s_.k_rho, s_.n_A), lshape_json);
    });
    arity(alg, "--nK", s_.n_K, "field multiplication arity");
    places(alg, "--krho", s_.k_rho, "places of the multiaction");
    arity(alg, "--nA", s_.n_A, "algebra multiplication arity");

    auto* eq = command(shape_cmd, "equal-lshape", "when the three shapes coincide", [this] {
      const auto r = shape::equal_lshape_arity_conditions({s_.m_K, s_.n_K, 2, s_.k_rho, s_.n_rho}, s_.n_A, s_.m_A);
      Json j;
      j["satisfied"] = r.satisfied;
      j["n_K_equals_m_K"] = r.field_arities_equal;
      j["n_rho_equals_n_A"] = r.semigroup_matches_algebra;
      j["violations"] = r.violations;
      j["unconstrained"] = r.unconstrained;
      emit(io_, j);
      return r.satisfied ? kOk : kDomainFailure;
    });
    arity(eq, "--nK", s_.n_K, "field multiplication arity");
    arity(eq, "--mK", s_.m_K, "field addition arity");
    arity(eq, "--nrho", s_.n_rho, "arity of the multiaction semigroup");
    arity(eq, "--nA", s_.n_A, "algebra multiplication arity");
    eq->add_option("--mA", s_.m_A, "algebra addition arity (unconstrained)");
    eq->add_option("--krho", s_.k_rho, "places (unconstrained)");

    auto* map = command(shape_cmd, "mapping", "multiplace mapping shape", [this] {
      return emit_shape(io_, shape::mapping_shape(s_.m_V, s_.m_V_prime, s_.k_F, s_.k_rho, s_.k_rho_prime),
                        [](const shape::MappingSignature& m) {
                          Json j;
                          j["k_F"] = m.k_F;
                          j["m_V"] = m.m_V;
                          j["m_V_prime"] = m.m_V_prime;
                          j["k_rho"] = m.k_rho;
                          j["k_rho_prime"] = m.k_rho_prime;
                          j["ell_mu_k"] = m.ell_mu_k;
                          j["ell_id_k"] = m.ell_id_k;
                          j["ell_mu_f"] = m.ell_mu_f;
                          j["ell_id_f"] = m.ell_id_f;
                          return j;
                        });
    });
    arity(map, "--mV", s_.m_V, "source vector addition arity");
    arity(map, "--mVp", s_.m_V_prime, "target vector addition arity");
    places(map, "--kF", s_.k_F, "places of the mapping");
    places(map, "--krho", s_.k_rho, "source multiaction places");
    places(map, "--krhop", s_.k_rho_prime, "target multiaction places");

    auto* fn = command(shape_cmd, "functional", "linear functional shape", [this] {
      return emit_shape(io_, shape::functional_shape(s_.m_K, s_.m_V, s_.n_K, s_.k_L, s_.k_rho),
                        [](const shape::FunctionalShape& f) {
                          Json j;
                          j["ell_nu_k"] = f.ell_nu_k;
                          j["ell_id_nu"] = f.ell_id_nu;
                          j["ell_mu_h"] = f.ell_mu_h;
                          j["ell_id_h"] = f.ell_id_h;
                          return j;
                        });
    });
    arity(fn, "--mK", s_.m_K, "field addition arity");
    arity(fn, "--mV", s_.m_V, "vector addition arity");
    arity(fn, "--nK", s_.n_K, "field multiplication arity");
    places(fn, "--kL", s_.k_L, "places of the functional");
    places(fn, "--krho", s_.k_rho, "multiaction places");

    auto* dual = command(shape_cmd, "dual", "dual space shape", [this] {
      return emit_shape(io_, shape::dual_space_shape(s_.n_K, s_.n_L), [](const shape::DualSpaceShape& d) {
        Json j;
        j["k_L"] = d.k_L;
        j["ell_mu_L"] = d.ell_mu_L;
        j["ell_id_L"] = d.ell_id_L;
        j["m_L_equals_m_K"] = d.m_L_equals_m_K;
        return j;
      });
    });
    arity(dual, "--nK", s_.n_K, "field multiplication arity");
    arity(dual, "--nL", s_.n_L, "dual multiplication arity");

    auto* ip = command(shape_cmd, "inner-pairing", "inner pairing and norm constraints", [this] {
      const auto r = shape::inner_pairing_constraints(s_.m_K, s_.n_K, s_.m_V, s_.k_rho, s_.N);
      Json j;
      j["valid"] = r.valid;
      j["n_K_minus_k_rho_is_1"] = r.places_one_below_multiplication;
      j["m_V_equals_m_K"] = r.additions_coincide;
      j["n_K_equals_N"] = r.multiplication_matches_pairing;
      j["norm_admissible"] = r.norm_admissible;
      j["violations"] = r.violations;
      emit(io_, j);
      return r.valid ? kOk : kDomainFailure;
    });
    arity(ip, "--mK", s_.m_K, "field addition arity");
    arity(ip, "--nK", s_.n_K, "field multiplication arity");
    arity(ip, "--mV", s_.m_V, "vector addition arity");
    places(ip, "--krho", s_.k_rho, "multiaction places");
    arity(ip, "--N", s_.N, "pairing arity");

    auto* reg = command(shape_cmd, "regular", "places of the regular multiaction", [this] {
      return emit_shape(io_, shape::regular_multiaction_places(s_.n_K, s_.ell), [](std::int64_t k) {
        Json j;
        j["k_rho"] = k;
        return j;
      });
    });
    arity(reg, "--nK", s_.n_K, "field multiplication arity");
    reg->add_option("--ell", s_.ell, "number of field multiplications")->required();

    auto* span = command(shape_cmd, "span", "length of a long operation", [this] {
      return emit_shape(io_, shape::long_product_length(s_.m_V, s_.ell), [](std::int64_t d) {
        Json j;
        j["length"] = d;
        return j;
      });
    });
    arity(span, "--arity", s_.m_V, "operation arity");
    span->add_option("--ell", s_.ell, "number of steps")->required();

    auto* ds = command(shape_cmd, "direct-sum", "direct sum compatibility", [this] {
      return emit_shape(io_, shape::direct_sum_compatible(components(), s_.m_V), [](const shape::DirectSumReport& r) {
        Json j;
        j["k_rho_total"] = r.k_rho_total;
        j["mode"] = std::string(shape::to_string(r.mode));
        return j;
      });
    });
    ds->add_option("--component", s_.components, "m_V,k_rho of one summand (repeatable)")->required();
    arity(ds, "--mV", s_.m_V, "target vector addition arity");

    auto* tp = command(shape_cmd, "tensor", "tensor product compatibility", [this] {
      return emit_shape(io_, shape::tensor_product_compatible(components(), s_.m_V),
                        [](const shape::TensorProductReport& r) {
                          Json j;
                          j["k_rho_common"] = r.k_rho_common;
                          j["mode"] = std::string(shape::to_string(r.mode));
                          return j;
                        });
    });
    tp->add_option("--component", s_.components, "m_V,k_rho of one factor (repeatable)")->required();
    arity(tp, "--mV", s_.m_V, "target vector addition arity");
  }

  std::vector<shape::SpaceComponent> components() const {
    std::vector<shape::SpaceComponent> out;
    for (const auto& c : s_.components) out.push_back(parse_component(c));
    return out;
  }

  void add_quantize() {
    auto* q = command(&app_, "quantize", "enumerate quantized arity shapes as CSV", [this] {
      io_.out << "k_rho,ell_mu,ell_id,n_K,n_rho\n";
      for (int k : quantize_k_) {
        const auto rows = shape::enumerate_quantized(k, quantize_max_).value();
        for (const auto& r : rows) {
          io_.out << k << ',' << r.ell_mu << ',' << r.ell_id << ',' << r.n_K << ',' << r.n_rho << '\n';
        }
      }
      return kOk;
    });
    q->add_option("--krho", quantize_k_, "places (repeatable)")->required()->check(CLI::Range(1, shape::kMaxPlaces));
    q->add_option("--max-arity", quantize_max_, "largest n_K")->capture_default_str()->check(
        CLI::Range(shape::kMinArity, shape::kMaxArity));
  }

  void add_class_table() {
    auto* t = command(&app_, "class-table", "shape invariants of every class as CSV", [this] {
      const auto rows = serial_ ? congruence::class_table_reference(b_max_) : congruence::class_table(b_max_);
      io_.out << "a,b,m,n,I,J\n";
      for (const auto& r : rows) {
        io_.out << r.cls.a << ',' << r.cls.b << ',';
        if (r.shape) {
          io_.out << r.shape->m << ',' << r.shape->n << ',' << r.shape->I << ',' << r.shape->J;
        } else {
          io_.out << ",,,";
        }
        io_.out << '\n';
      }
      return kOk;
    });
    t->add_option("--b-max", b_max_, "largest modulus")->capture_default_str()->check(CLI::Range(2, 100000));
    t->add_flag("--serial", serial_, "use the serial scan");
  }

  void add_class_info() {
    auto* c = command(&app_, "class-info", "arity shape, units and querelements of one class", [this] {
      const congruence::CongruenceClass cls{class_a_, class_b_};
      Json j = class_json(cls);
      const auto s = congruence::try_arity_shape(cls);
      if (!s) {
        j["error"] = "NoMultiplicativeArity";
        emit(io_, j);
        return kDomainFailure;
      }
      j["m"] = s->m;
      j["n"] = s->n;
      j["I"] = json::big(s->I);
      j["J"] = json::big(s->J);
      const auto z = congruence::zero_and_unit_analysis(cls);
      j["unit"] = z.unit ? json::big(*z.unit) : Json(nullptr);
      j["querable"] = json::big_list(z.querable);
      j["all_querable"] = z.all_querable;
      j["summary"] = z.summary;
      emit(io_, j);
      return kOk;
    });
    c->add_option("--a", class_a_, "residue")->required();
    c->add_option("--b", class_b_, "modulus")->required();
  }

  void add_lps_table() {
    auto* t = command(&app_, "lps-table", "limiting arities as CSV", [this] {
      io_.out << "p_plus_q,k,m0,n0\n";
      for (int pq : lps_pq_) {
        for (int k = 0; k <= lps_k_max_; ++k) {
          const auto r = limiting_arities(pq, k);
          io_.out << pq << ',' << k << ',' << r.m0 << ',' << r.n0 << '\n';
        }
      }
      return kOk;
    });
    t->add_option("--pq", lps_pq_, "values of p+q")->capture_default_str()->check(CLI::Range(2, 1000));
    t->add_option("--k-max", lps_k_max_, "largest k")->capture_default_str()->check(CLI::Range(0, 1000));
  }

  void add_search() {
    auto* s = command(&app_, "search", "search equal sums of like powers", [this] {
      const RingDescriptor d = search_ring_.descriptor();
      const PowerSumInstance inst{make_ring(d), search_l_, search_p_, search_q_};
      SearchOptions opts;
      opts.lo = search_min_;
      opts.hi = search_max_;
      opts.exclude_shift_zero = exclude_shift_zero_;
      opts.workers = workers_;
      const auto found = serial_ ? search_reference(inst, opts) : search(inst, opts);
      std::unique_ptr<SolutionStore> store;
      if (save_) store = std::make_unique<SolutionStore>(resolve_store_path(store_path_));
      for (const auto& r : found) {
        json::SolutionRecord rec{d, search_l_, search_p_, search_q_, r.solution, r.sum};
        emit(io_, json::to_json(rec));
        if (store) store->append(rec);
      }
      return kOk;
    });
    search_ring_.add_to(s);
    s->add_option("--l", search_l_, "multiplication count")->capture_default_str()->check(CLI::Range(1, 64));
    s->add_option("--p", search_p_, "additions on the left")->capture_default_str()->check(CLI::Range(0, 64));
    s->add_option("--q", search_q_, "additions on the right")->capture_default_str()->check(CLI::Range(0, 64));
    s->add_option("--min", search_min_, "smallest index")->capture_default_str();
    s->add_option("--max", search_max_, "largest index")->capture_default_str();
    s->add_option("--workers", workers_, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
    s->add_flag("--exclude-shift-zero", exclude_shift_zero_, "drop -1 in the exotic ring");
    s->add_flag("--serial", serial_, "use the serial reference search");
    s->add_flag("--save", save_, "append results to the solution store");
    s->add_option("--store", store_path_, "store path (default $POLYADICA_STORE or polyadica_store.jsonl)");
  }

  void add_verify() {
    auto* v = command(&app_, "verify", "verify a solution object", [this] {
      const auto rec = json::read_solution(json::parse(read_input(in_path_)));
      const PowerSumInstance inst{make_ring(rec.ring), rec.l, rec.p, rec.q};
      const auto verdict = verify(inst, rec.solution);
      Json j;
      j["holds"] = verdict.holds;
      j["nontrivial"] = verdict.nontrivial;
      j["length_ok"] = verdict.length_ok;
      j["lhs"] = verdict.lhs ? json::big(*verdict.lhs) : Json(nullptr);
      j["rhs"] = verdict.rhs ? json::big(*verdict.rhs) : Json(nullptr);
      if (verdict.plain_form_holds) j["plain_form_holds"] = *verdict.plain_form_holds;
      j["reason"] = verdict.reason;
      emit(io_, j);
      return verdict.holds && verdict.nontrivial ? kOk : kDomainFailure;
    });
    v->add_option("--file", in_path_, "solution JSON ('-' for stdin)")->required();
  }

  void add_identities() {
    command(&app_, "identities", "verify the built-in identity registry", [this] {
      bool all_as_expected = true;
      for (const auto& id : known_identities()) {
        const PowerSumInstance inst{make_ring(id.ring), id.l, id.p, id.q};
        const auto v = verify(inst, id.solution);
        const bool as_expected = v.holds == id.expected_holds;
        all_as_expected = all_as_expected && as_expected;
        Json j;
        j["id"] = id.id;
        j["display"] = id.display;
        j["ring"] = json::to_json(id.ring);
        j["holds"] = v.holds;
        j["status"] = !as_expected ? "unexpected" : (id.suspect ? "flagged" : "pass");
        if (v.lhs) j["lhs"] = json::big(*v.lhs);
        if (v.rhs) j["rhs"] = json::big(*v.rhs);
        if (!id.note.empty()) j["note"] = id.note;
        emit(io_, j);
      }
      return all_as_expected ? kOk : kDomainFailure;
    });
  }

  te::MultigradeSolution source_solution() const {
    if (!in_path_.empty()) return json::read_multigrade(json::parse(read_input(in_path_)));
    if (builtin_ == "golden") return te::golden_solution();
    if (builtin_ == "octet") return te::octet_solution();
    if (!builtin_.empty()) throw Error(ErrorCode::kInvalidArgument, "unknown built-in '" + builtin_ + "'");
    if (degree_ > 0) return te::prouhet_thue_morse(degree_);
    throw Error(ErrorCode::kInvalidArgument, "give --degree, --builtin or --in");
  }

  void add_source_options(CLI::App* app) {
    app->add_option("--degree", degree_, "Prouhet-Thue-Morse degree")->check(CLI::Range(1, 20));
    app->add_option("--builtin", builtin_, "golden | octet");
    app->add_option("--in", in_path_, "multigrade JSON file ('-' for stdin)");
  }

  void add_te_gen() {
    auto* g = command(&app_, "te-gen", "print a multigrade solution", [this] {
      emit(io_, json::to_json(source_solution()));
      return kOk;
    });
    add_source_options(g);
  }

  void add_frolov() {
    auto* f = command(&app_, "frolov", "affine transform x -> a + b x of a multigrade solution", [this] {
      emit(io_, json::to_json(te::frolov_transform(source_solution(), parse_bigint(frolov_a_),
                                                   parse_bigint(frolov_b_))));
      return kOk;
    });
    f->add_option("--a", frolov_a_, "shift")->required();
    f->add_option("--b", frolov_b_, "scale, nonzero")->required();
    add_source_options(f);
  }

  void add_te_pipeline() {
    auto* p = command(&app_, "te-pipeline", "equal sums of like powers over congruence classes", [this] {
      const auto sol = source_solution();
      const auto matches = te::arity_match(static_cast<int>(sol.left.size()), sol.degree);
      std::unique_ptr<SolutionStore> store;
      if (save_) store = std::make_unique<SolutionStore>(resolve_store_path(store_path_));
      int emitted = 0;
      for (const auto& match : matches) {
        if (!include_binary_ && !match.non_binary) continue;
        if (!match.satisfies_bound) continue;
        std::vector<te::ClassSolution> generated;
        try {
          generated = te::generate_class_solutions(sol, match, b_max_);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNoMatchingClass) throw;
          io_.err << "note: " << e.what() << '\n';
          continue;
        }
        for (const auto& g : generated) {
          const int r = g.l * (g.shape.n - 1) + 1;
          Json j;
          j["class"] = class_json(g.cls);
          j["m"] = g.shape.m;
          j["n"] = g.shape.n;
          j["p"] = g.p;
          j["l"] = g.l;
          j["r"] = r;
          j["u"] = json::big_list(g.solution.u);
          j["v"] = json::big_list(g.solution.v);
          j["display"] = te::display(g.solution, r);
          emit(io_, j);
          ++emitted;
          if (store) {
            store->append({{RingKind::kCongruence, g.cls.a, g.cls.b}, g.l, g.p, g.q, g.solution, std::nullopt});
          }
        }
      }
      if (emitted == 0) {
        io_.err << "error: NoMatchingClass: no class under b_max fits any arity match\n";
        return kDomainFailure;
      }
      return kOk;
    });
    add_source_options(p);
    p->add_option("--b-max", b_max_, "largest modulus")->capture_default_str()->check(CLI::Range(2, 100000));
    p->add_flag("--include-binary", include_binary_, "keep matches with m = 2 or n = 2");
    p->add_flag("--save", save_, "append results to the solution store");
    p->add_option("--store", store_path_, "store path");
  }

  struct ShapeArgs {
    int m_K = 2, n_K = 2, m_V = 2, m_V_prime = 2, n_rho = 2, n_A = 2, m_A = 2, n_L = 2, N = 2;
    int k_rho = 1, k_rho_prime = 1, k_F = 1, k_L = 1;
    std::int64_t ell = 1;
    std::vector<std::string> components;
  };

  Io io_;
  CLI::App app_{"Polyadic ring arithmetic, arity shapes and equal sums of like powers", "polyadica"};
  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers_;

  ShapeArgs s_;
  std::vector<int> quantize_k_;
  int quantize_max_ = 12;
  std::int64_t b_max_ = 10;
  bool serial_ = false;
  std::int64_t class_a_ = 1, class_b_ = 2;
  std::vector<int> lps_pq_{2, 3, 4};
  int lps_k_max_ = 3;
  RingOptions search_ring_;
  int search_l_ = 1, search_p_ = 0, search_q_ = 1;
  std::int64_t search_min_ = 0, search_max_ = 20;
  int workers_ = 0;
  bool exclude_shift_zero_ = false;
  bool save_ = false;
  std::string store_path_;
  std::string in_path_;
  std::string builtin_;
  int degree_ = 0;
  std::string frolov_a_, frolov_b_;
  bool include_binary_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace polyadica
