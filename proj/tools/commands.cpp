#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "barbridge/analogous.hpp"
#include "barbridge/dowker.hpp"
#include "barbridge/error.hpp"
#include "csv.hpp"
#include "generators.hpp"
#include "svg.hpp"

namespace barbridge::cli {

namespace {

std::string basename(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

void validate(const RunConfig& c) {
  if (c.k < 0) throw InputError("--k must be non-negative");
  if (c.cap < 1) throw InputError("--cap must be at least 1");
  if (c.member_cap < 1) throw InputError("--member-cap must be at least 1");
  if (c.tie_break != "error" && c.tie_break != "jitter")
    throw InputError("--tie-break must be error or jitter, got '" + c.tie_break + "'");
  if (c.mode != "feature" && c.mode != "similarity")
    throw InputError("--mode must be feature or similarity, got '" + c.mode + "'");
  if (c.extension_mode != "auto" && c.extension_mode != "general" && c.extension_mode != "f2")
    throw InputError("--extension-mode must be auto, general or f2, got '" + c.extension_mode + "'");
  if (c.max_dim && *c.max_dim < c.k + 1)
    throw InputError("--max-dim must be at least k + 1 = " + std::to_string(c.k + 1));
  FieldSpec check(c.field);
  (void)check;
}

int max_dim(const RunConfig& c) { return c.max_dim ? *c.max_dim : c.k + 1; }

ExtensionMode extension_mode(const RunConfig& c) {
  if (c.extension_mode == "general") return ExtensionMode::general;
  if (c.extension_mode == "f2") return ExtensionMode::f2_unique_deaths;
  return ExtensionMode::automatic;
}

Json config_json(const RunConfig& c) {
  std::vector<std::string> names;
  for (const auto& p : c.inputs) names.push_back(basename(p));
  Json j = {{"command", c.command},
            {"inputs", names},
            {"points", c.points},
            {"k", c.k},
            {"field", c.field},
            {"max_dim", max_dim(c)},
            {"tie_break", c.tie_break},
            {"cap", c.cap},
            {"psi_override", c.psi_override ? Json(*c.psi_override) : Json(nullptr)},
            {"strict_complete", c.strict_complete}};
  if (c.command == "extend" || c.command == "analogous") {
    j["extension_mode"] = c.extension_mode;
    if (c.cycle.empty()) j["bar"] = c.bar;
    else j["cycle"] = basename(c.cycle);
  }
  if (c.command == "analogous") {
    j["mode"] = c.mode;
    j["member_cap"] = c.member_cap;
  }
  if (!c.generator.empty()) {
    j["generator"] = c.generator;
    j["seed"] = c.seed;
  }
  if (!c.random.empty()) {
    j["random"] = c.random;
    j["seed"] = c.seed;
  }
  return j;
}

Json document(const RunConfig& c) {
  return {{"schema", kSchema}, {"command", c.command}, {"config", config_json(c)}};
}

Json input_json(const std::string& name, const DissimilarityMatrix& m) {
  return {{"name", name},
          {"rows", m.size()},
          {"cols", m.size()},
          {"digest", digest(m.size(), m.size(), m.entries())}};
}

Json input_json(const std::string& name, const CrossDissimilarityMatrix& m) {
  return {{"name", name},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"digest", digest(m.rows(), m.cols(), m.entries())}};
}

DissimilarityMatrix square_input(const RunConfig& c, const std::string& path) {
  Table t = read_csv(path);
  DissimilarityMatrix m = c.points ? euclidean_distances(to_points(t)) : to_dissimilarity(t, path);
  return c.tie_break == "jitter" ? m.jittered() : m;
}

CrossDissimilarityMatrix cross_input(const RunConfig& c, const std::string& path) {
  CrossDissimilarityMatrix m = to_cross(read_csv(path), path);
  return c.tie_break == "jitter" ? m.jittered() : m;
}

PointPair generated(const std::string& name, std::uint64_t seed) {
  if (name == "circles") return circle_pair(seed);
  if (name == "clusters") return cluster_scenario(seed);
  if (name == "torus") return torus_grid(seed);
  if (name == "trefoil") return trefoil(seed);
  throw InputError("unknown generator '" + name + "' (circles, clusters, torus, trefoil)");
}

BarId select_bar(const PersistenceResult& r, std::size_t rank, const char* what) {
  auto ranks = ranked_bars(r);
  if (rank >= ranks.size())
    throw InputError(std::string("bar rank ") + std::to_string(rank) + " out of range: " + what +
                     " has " + std::to_string(ranks.size()) + " bars");
  return ranks[rank];
}

std::shared_ptr<const PersistenceResult> persistence_of(const DissimilarityMatrix& m,
                                                        const RunConfig& c) {
  return std::make_shared<const PersistenceResult>(compute_persistence(
      std::make_shared<const GradedComplex>(clique_complex(m, max_dim(c))), c.k, FieldSpec(c.field)));
}

// Baseline bars on top of hatched offsets, each from its extension grade.
std::vector<Highlight> extension_marks(const ExtensionResult& e) {
  std::vector<Highlight> offsets, baselines;
  for (const BarExtensionSet& s : e.bar_extensions) {
    for (const BarRepresentation& o : s.offsets)
      for (const BarTerm& t : o.terms) offsets.push_back({t.bar, Mark::offset, s.at});
    for (const BarTerm& t : s.baseline.terms) baselines.push_back({t.bar, Mark::baseline, s.at});
  }
  offsets.insert(offsets.end(), baselines.begin(), baselines.end());
  return offsets;
}

std::string degree_title(const std::string& name, int k) {
  return name + ", degree " + std::to_string(k);
}

CommandResult cmd_persistence(const RunConfig& c) {
  if (c.inputs.size() != 1) throw InputError("persistence takes one input");
  DissimilarityMatrix m = square_input(c, c.inputs[0]);
  auto r = persistence_of(m, c);
  CommandResult out;
  out.document = document(c);
  out.document["inputs"] = Json::array({input_json(basename(c.inputs[0]), m)});
  out.document["barcode"] = barcode_json(*r, true);
  out.svg = render_barcodes({{degree_title("X", c.k), r.get(), {}}});
  return out;
}

CommandResult cmd_extend(const RunConfig& c) {
  if (c.inputs.size() != 2) throw InputError("extend takes two inputs (Z source, Y source)");
  DissimilarityMatrix mz = square_input(c, c.inputs[0]);
  DissimilarityMatrix my = square_input(c, c.inputs[1]);
  if (mz.size() != my.size())
    throw InputError("Z and Y inputs have " + std::to_string(mz.size()) + " and " +
                     std::to_string(my.size()) + " points");
  auto z = persistence_of(mz, c);
  auto y = persistence_of(my, c);
  CommandResult out;
  out.document = document(c);
  out.document["inputs"] = Json::array(
      {input_json(basename(c.inputs[0]), mz), input_json(basename(c.inputs[1]), my)});
  out.document["barcodes"] = {{"Z", barcode_json(*z, false)}, {"Y", barcode_json(*y, false)}};

  std::vector<Highlight> z_marks, y_marks;
  if (!c.cycle.empty()) {
    Chain tau = read_chain(c.cycle, FieldSpec(c.field));
    const Grade psi = c.psi_override ? *c.psi_override : z->complex().chain_grade(tau);
    ExtensionResult e = cycle_to_bar(z->complex(), *y, psi, tau);
    out.document["extension"] = extension_json(e, y->complex().scale());
    for (const BarTerm& t : z->bar_representation(tau, psi).terms)
      z_marks.push_back({t.bar, Mark::selected, 0});
    y_marks = extension_marks(e);
  } else {
    const BarId tau = select_bar(*z, c.bar, "Z");
    BarExtensionResult e =
        bar_to_bars(*z, *y, tau, {extension_mode(c), c.psi_override, c.cap});
    out.document["extension"] = bar_extension_json(e, *z, y->complex().scale());
    out.truncated = e.truncated;
    z_marks.push_back({tau, Mark::selected, 0});
    if (!e.per_class.empty()) y_marks = extension_marks(e.per_class.front());
  }
  out.document["diagnostics"] = {{"truncated", out.truncated}};
  out.svg = render_barcodes({{degree_title("Z", c.k), z.get(), z_marks},
                             {degree_title("Y", c.k), y.get(), y_marks}});
  return out;
}

CommandResult cmd_analogous(const RunConfig& c) {
  DissimilarityMatrix mq, mp;
  CrossDissimilarityMatrix mqp;
  std::vector<std::string> names;
  if (!c.generator.empty()) {
    if (!c.inputs.empty()) throw InputError("use either --generate or input files");
    PointPair pp = generated(c.generator, c.seed);
    if (pp.q.front().size() != pp.p.front().size())
      throw InputError("generator '" + c.generator + "' does not share a space between Q and P");
    mq = euclidean_distances(pp.q);
    mp = euclidean_distances(pp.p);
    mqp = euclidean_cross_distances(pp.q, pp.p);
    names = {c.generator + ":Q", c.generator + ":P", c.generator + ":QP"};
  } else if (c.points && c.inputs.size() == 2) {
    PointCloud q = to_points(read_csv(c.inputs[0]));
    PointCloud p = to_points(read_csv(c.inputs[1]));
    mq = euclidean_distances(q);
    mp = euclidean_distances(p);
    mqp = euclidean_cross_distances(q, p);
    names = {basename(c.inputs[0]), basename(c.inputs[1]), "euclidean"};
  } else if (c.inputs.size() == 3) {
    mq = square_input(c, c.inputs[0]);
    mp = square_input(c, c.inputs[1]);
    mqp = cross_input(c, c.inputs[2]);
    names = {basename(c.inputs[0]), basename(c.inputs[1]), basename(c.inputs[2])};
  } else {
    throw InputError("analogous takes M_Q, M_P, M_QP (or two point clouds with --points)");
  }
  if (c.tie_break == "jitter" && (!c.generator.empty() || c.inputs.size() == 2)) {
    mq = mq.jittered();
    mp = mp.jittered();
    mqp = mqp.jittered();
  }

  const FieldSpec field(c.field);
  if (max_dim(c) != c.k + 1)
    throw InputError("analogous builds its complexes up to dimension k + 1; drop --max-dim");
  AnalogousInputs in = prepare_analogous(mq, mp, mqp, c.k, field);
  AnalogousOptions options;
  options.extension_mode = extension_mode(c);
  options.psi = c.psi_override;
  options.cap = c.cap;
  options.member_cap = c.member_cap;

  const bool feature = c.mode == "feature";
  const BarId tau = feature ? select_bar(*in.clique_q, c.bar, "bc_k(X_Q)")
                            : select_bar(*in.witness_qp, c.bar, "bc_k(W_QP)");
  AnalogousBarsResult r =
      feature ? feature_centric(in, tau, options) : similarity_centric(in, tau, options);

  CommandResult out;
  out.truncated = r.truncated;
  out.document = document(c);
  out.document["inputs"] = Json::array(
      {input_json(names[0], mq), input_json(names[1], mp), input_json(names[2], mqp)});
  out.document["barcodes"] = {{"X_Q", barcode_json(*in.clique_q, false)},
                              {"W_QP", barcode_json(*in.witness_qp, false)},
                              {"W_PQ", barcode_json(*in.witness_pq, false)},
                              {"X_P", barcode_json(*in.clique_p, false)}};
  out.document["analogous"] = analogous_json(r, in);
  out.document["diagnostics"] = {{"truncated", r.truncated}};

  std::vector<Highlight> q_marks, w_marks, p_marks;
  if (feature) {
    q_marks.push_back({tau, Mark::selected, 0});
    if (!r.source.per_class.empty()) w_marks = extension_marks(r.source.per_class.front());
    for (const FeatureDual& d : r.duals) {
      auto m = extension_marks(d.extension);
      p_marks.insert(p_marks.end(), m.begin(), m.end());
    }
  } else {
    w_marks.push_back({tau, Mark::selected, 0});
    if (!r.source.per_class.empty()) q_marks = extension_marks(r.source.per_class.front());
    if (r.target && !r.target->per_class.empty())
      p_marks = extension_marks(r.target->per_class.front());
  }
  out.svg = render_barcodes({{degree_title("X_Q", c.k), in.clique_q.get(), q_marks},
                             {degree_title("W_QP", c.k), in.witness_qp.get(), w_marks},
                             {degree_title("X_P", c.k), in.clique_p.get(), p_marks}});
  return out;
}

CommandResult cmd_dowker_check(const RunConfig& c) {
  CrossDissimilarityMatrix b;
  std::string name;
  if (!c.random.empty()) {
    if (!c.inputs.empty()) throw InputError("use either --random or an input file");
    std::size_t rows = 0, cols = 0;
    char x = 0;
    int used = 0;
    if (std::sscanf(c.random.c_str(), "%zu%c%zu%n", &rows, &x, &cols, &used) != 3 || x != 'x' ||
        used != static_cast<int>(c.random.size()) || rows == 0 || cols == 0)
      throw InputError("--random expects ROWSxCOLS, got '" + c.random + "'");
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> v(rows * cols);
    for (double& e : v) e = u(rng);
    b = CrossDissimilarityMatrix(rows, cols, std::move(v));
    name = "random:" + c.random;
  } else {
    if (c.inputs.size() != 1) throw InputError("dowker-check takes one input");
    b = cross_input(c, c.inputs[0]);
    name = basename(c.inputs[0]);
  }
  if (max_dim(c) != c.k + 1)
    throw InputError("dowker-check builds its complexes up to dimension k + 1; drop --max-dim");
  DowkerBarcodeCheck check = dowker_barcode_check(b, c.k, FieldSpec(c.field));
  CommandResult out;
  out.alarm = !check.equal;
  out.document = document(c);
  out.document["inputs"] = Json::array({input_json(name, b)});
  out.document["barcodes"] = {{"landmark_side", barcode_json(check.landmark_side, false)},
                              {"witness_side", barcode_json(check.witness_side, false)}};
  out.document["equal"] = check.equal;
  out.svg = render_barcodes({{degree_title("W(B)", c.k), &check.landmark_side, {}},
                             {degree_title("W(B^T)", c.k), &check.witness_side, {}}});
  return out;
}

CommandResult cmd_generate(const RunConfig& c) {
  PointPair pp = generated(c.generator, c.seed);
  CommandResult out;
  out.files.emplace_back("q.csv", write_csv(pp.q));
  out.files.emplace_back("p.csv", write_csv(pp.p));
  if (pp.q.front().size() == pp.p.front().size()) {
    auto m = euclidean_cross_distances(pp.q, pp.p);
    std::vector<std::vector<double>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) rows[r].push_back(m.at(r, col));
    out.files.emplace_back("qp.csv", write_csv(rows));
  }
  out.document = document(c);
  Json files = Json::array();
  for (const auto& [name, text] : out.files) files.push_back(name);
  out.document["files"] = std::move(files);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

CommandResult execute(const RunConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  if (c.command == "persistence") out = cmd_persistence(c);
  else if (c.command == "extend") out = cmd_extend(c);
  else if (c.command == "analogous") out = cmd_analogous(c);
  else if (c.command == "dowker-check") out = cmd_dowker_check(c);
  else if (c.command == "generate") out = cmd_generate(c);
  else throw InputError("unknown command '" + c.command + "'");
  if (c.timings) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out.document["timings"] = {{"total_ms", ms.count()}};
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    CommandResult r = execute(config);
    if (config.command == "generate") {
      const std::filesystem::path dir = config.out.empty() ? "." : config.out;
      std::filesystem::create_directories(dir);
      for (const auto& [name, text] : r.files) write_file((dir / name).string(), text);
      out << canonical_json(r.document);
    } else if (config.out.empty()) {
      out << canonical_json(r.document);
    } else {
      write_file(config.out, canonical_json(r.document));
    }
    if (!config.svg.empty()) write_file(config.svg, r.svg);
    if (r.alarm) {
      err << "error: the two witness barcodes differ\n";
      return kFailure;
    }
    if (r.truncated && config.strict_complete) {
      err << "error: enumeration truncated at the cap\n";
      return kTruncated;
    }
    return kOk;
  } catch (const AssumptionViolation& e) {
    err << "assumption violated: " << e.what() << "\n";
    return kAssumption;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace barbridge::cli
