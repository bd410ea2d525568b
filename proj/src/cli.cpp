#include "dioph/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "dioph/catalog_io.hpp"
#include "dioph/claims.hpp"
#include "dioph/pell.hpp"
#include "dioph/search.hpp"

namespace dioph {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("DIOPH_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

struct SearchOptions {
  SearchConfig cfg;
  std::string role = "any";
  std::string shape = "any";
  std::string format = "json";
  std::string out_path;
  std::string checkpoint;
  std::uint64_t checkpoint_every = 100000;
  std::string resume;
};

SearchConfig comparable(SearchConfig c) {
  c.threads = 1;
  c.budget = 0;
  return c;
}

int search_pointsets(const SearchOptions& o, std::ostream& out) {
  RunManifest m;
  m.config = o.cfg;
  m.started = utc_timestamp();
  const auto res = enumerate_ngon_pointsets(o.cfg.n, o.cfg.k, o.cfg.dmax, o.cfg.budget);
  m.finished = utc_timestamp();
  m.visited = res.visited;
  m.complete = res.complete;
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const auto& s : res.sets) sets.push_back(to_json(s));
  m.digest = "";
  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "distances,radicand\n";
    for (const auto& s : res.sets) {
      for (std::size_t i = 0; i < s.distances.size(); ++i) os << (i ? ";" : "") << s.distances[i];
      os << ',' << s.radicand << '\n';
    }
    text = os.str();
  } else {
    text = nlohmann::ordered_json{{"manifest", to_json(m)}, {"sets", sets}}.dump(2) + "\n";
  }
  emit(text, o.out_path, out);
  return kOk;
}

int search_quads(const SearchOptions& o, std::ostream& out, std::ostream& err) {
  Catalog cat;
  cat.manifest.config = o.cfg;
  cat.manifest.started = utc_timestamp();

  SearchResult seed;
  SearchHooks hooks;
  if (!o.resume.empty()) {
    Checkpoint cp;
    try {
      cp = checkpoint_from_json(nlohmann::ordered_json::parse(read_file(o.resume)));
    } catch (const std::runtime_error& e) {
      throw UsageError(o.resume + ": " + e.what());
    }
    if (comparable(cp.manifest.config) != comparable(o.cfg)) {
      throw UsageError("checkpoint " + o.resume + " was written for a different configuration");
    }
    if (cp.partitions_total != quad_partition_count(o.cfg)) throw UsageError("checkpoint partition count mismatch");
    seed.entries = cp.entries;
    seed.visited = cp.manifest.visited;
    seed.partitions_done = cp.partitions_done;
    hooks.resume = &seed;
    cat.manifest.started = cp.manifest.started;
  }
  if (!o.checkpoint.empty()) {
    hooks.progress_every = std::max<std::uint64_t>(1, o.checkpoint_every);
    hooks.on_progress = [&](const SearchProgress& p) {
      Checkpoint cp;
      cp.manifest = cat.manifest;
      cp.manifest.visited = p.visited;
      cp.manifest.digest = catalog_digest(*p.entries);
      cp.manifest.complete = false;
      cp.partitions_done = p.partitions_done;
      cp.partitions_total = p.partitions_total;
      cp.entries = *p.entries;
      write_file(o.checkpoint, to_json(cp).dump() + "\n");
    };
  }

  const auto res = enumerate_quads(o.cfg, hooks);
  cat.entries = res.entries;
  cat.manifest.finished = utc_timestamp();
  cat.manifest.visited = res.visited;
  cat.manifest.digest = catalog_digest(res.entries);
  cat.manifest.complete = res.complete;
  if (!res.complete) {
    err << "warning: budget exhausted after " << res.partitions_done << " of " << res.partitions_total
        << " partitions; catalog is partial\n";
  }
  if (!o.checkpoint.empty()) {
    Checkpoint cp;
    cp.manifest = cat.manifest;
    cp.partitions_done = res.partitions_done;
    cp.partitions_total = res.partitions_total;
    cp.entries = res.entries;
    write_file(o.checkpoint, to_json(cp).dump() + "\n");
  }
  emit(o.format == "csv" ? to_csv(cat.entries) : to_json(cat).dump(2) + "\n", o.out_path, out);
  return kOk;
}

std::optional<QuadDistances> parse_tuple(const std::string& text) {
  std::array<std::int64_t, 6> t{};
  std::istringstream is(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(is, part, ',')) {
    if (i == 6 || part.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
      t[i] = std::stoll(part, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != part.size() || t[i] < 1) return std::nullopt;
    ++i;
  }
  if (i != 6 || text.back() == ',') return std::nullopt;
  return QuadDistances::from_tuple(t);
}

void print_classification(const QuadDistances& q, std::ostream& out) {
  const auto c = classify(q);
  out << "distances=" << q << '\n' << "class=" << to_string(c.kind) << '\n';
  if (!c.detail.empty()) out << "detail=" << c.detail << '\n';
  if (is_polygon(c.kind)) {
    const bool convex = c.kind == ConfigKind::Convex;
    const auto par = is_trapezoid(q);
    out << "cyclic=" << std::boolalpha << (convex && is_cyclic(q)) << '\n'
        << "tangential=" << (convex && is_tangential(q)) << '\n'
        << "trapezoid=" << to_string(par) << '\n'
        << "parallelogram=" << (par == ParallelSides::Parallelogram) << '\n';
  }
  const auto emb = embed(q);
  if (const auto* e = std::get_if<PlanarEmbedding>(&emb)) {
    out << "radicand=" << e->radicand << '\n';
    for (int i = 0; i < 4; ++i) {
      out << kVertexNames[i] << "=(" << e->points[i].x.str() << ", " << e->points[i].y.str() << ")\n";
    }
  } else {
    const auto& nr = std::get<NotRealizable>(emb);
    out << "embedding=none (" << to_string(nr.reason) << ")\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and verification of integer-distance quadrilaterals", "dioph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  SearchOptions so;
  so.cfg.threads = default_threads();
  auto* search = app.add_subcommand("search", "enumerate configurations and write a catalog");
  search->add_option("--n", so.cfg.n, "number of points (4 = quadrilateral catalog, 3..7 = point sets)")
      ->check(CLI::Range(3, 7));
  search->add_option("--k", so.cfg.k, "required distance")->required();
  search->add_option("--role", so.role, "role of the distance k")->check(CLI::IsMember({"side", "diagonal", "any"}));
  search->add_option("--dmax", so.cfg.dmax, "bound on every pairwise distance")->required();
  search->add_option("--shape", so.shape)->check(CLI::IsMember({"convex", "concave", "any"}));
  search->add_flag("--cyclic", so.cfg.require_cyclic);
  search->add_flag("--tangential", so.cfg.require_tangential);
  search->add_flag("--trapezoid", so.cfg.require_trapezoid);
  search->add_flag("--degenerate", so.cfg.include_degenerate, "also list collinear configurations");
  search->add_option("--threads", so.cfg.threads, "worker threads (default: DIOPH_THREADS or 1)");
  search->add_option("--budget", so.cfg.budget, "stop after this many candidate tuples (0 = unbounded)");
  search->add_option("--format", so.format)->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--out", so.out_path, "output file (default: stdout)");
  search->add_option("--checkpoint", so.checkpoint, "checkpoint file written during the run");
  search->add_option("--checkpoint-every", so.checkpoint_every, "candidate tuples between checkpoints");
  search->add_option("--resume", so.resume, "continue from a checkpoint file");

  std::string claim_id;
  std::int64_t claim_dmax = 0;
  std::string verify_format = "text";
  int verify_threads = default_threads();
  bool list_claims = false;
  auto* verify = app.add_subcommand("verify", "check a registered claim up to a bound");
  verify->add_option("--claim", claim_id);
  verify->add_option("--dmax", claim_dmax);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--threads", verify_threads);
  verify->add_flag("--list", list_claims, "list registered claims");

  std::int64_t pell_d = 0;
  std::size_t pell_count = 1;
  bool pell_quad = false;
  auto* pell = app.add_subcommand("pell", "solutions of x^2 - d*y^2 = 1");
  pell->add_option("--d", pell_d)->required();
  pell->add_option("--count", pell_count);
  pell->add_flag("--quad", pell_quad, "print (b, c) = ((x - 1)/2, y); requires d = 12");

  std::string tuple_text;
  auto* cls = app.add_subcommand("classify", "classify a labeled quadrilateral ab,bc,cd,da,ac,bd");
  cls->add_option("distances", tuple_text)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*search) {
      so.cfg.role = so.role == "side" ? RoleFilter::Side : so.role == "diagonal" ? RoleFilter::Diagonal : RoleFilter::Any;
      so.cfg.shape =
          so.shape == "convex" ? ShapeFilter::Convex : so.shape == "concave" ? ShapeFilter::Concave : ShapeFilter::Any;
      try {
        validate(so.cfg);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (so.cfg.n != 4) {
        if (!so.checkpoint.empty() || !so.resume.empty()) throw UsageError("checkpoints require --n 4");
        return search_pointsets(so, out);
      }
      return search_quads(so, out, err);
    }
    if (*verify) {
      if (list_claims) {
        for (const auto& c : registered_claims()) out << c.id << "  " << c.statement << '\n';
        return kOk;
      }
      if (claim_id.empty() || claim_dmax < 1) throw UsageError("verify needs --claim ID and --dmax >= 1");
      if (!is_registered_claim(claim_id)) throw UsageError("unknown claim: " + claim_id);
      if (verify_threads < 1) throw UsageError("threads must be >= 1");
      const auto rep = verify_claim(claim_id, claim_dmax, verify_threads);
      if (verify_format == "json") {
        out << to_json(rep).dump(2) << '\n';
      } else {
        out << to_text(rep);
      }
      return rep.verdict == rep.expected ? kOk : kRefuted;
    }
    if (*pell) {
      if (pell_count < 1) throw UsageError("count must be >= 1");
      if (pell_quad && pell_d != 12) throw UsageError("--quad requires --d 12");
      std::vector<PellSolution> sols;
      try {
        sols = pell_stream(pell_d, pell_count);
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      for (const auto& s : sols) {
        if (pell_quad) {
          const auto [b, c] = pell_to_quad(s);
          out << b << ' ' << c << '\n';
        } else {
          out << s.x << ' ' << s.y << '\n';
        }
      }
      return kOk;
    }
    if (*cls) {
      const auto q = parse_tuple(tuple_text);
      if (!q) throw UsageError("expected six positive integers ab,bc,cd,da,ac,bd, got '" + tuple_text + "'");
      print_classification(*q, out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::ordered_json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dioph
