#include "dioph/catalog_io.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dioph {

using json = nlohmann::ordered_json;

namespace {

const char* class_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::Convex: return "convex";
    case ConfigKind::Concave: return "concave";
    case ConfigKind::DegenerateCollinear: return "degenerate";
    default: return to_string(k);
  }
}

RoleFilter role_filter_from(const std::string& s) {
  if (s == "side") return RoleFilter::Side;
  if (s == "diagonal") return RoleFilter::Diagonal;
  if (s == "any") return RoleFilter::Any;
  throw std::runtime_error("bad role: " + s);
}

ShapeFilter shape_filter_from(const std::string& s) {
  if (s == "convex") return ShapeFilter::Convex;
  if (s == "concave") return ShapeFilter::Concave;
  if (s == "any") return ShapeFilter::Any;
  throw std::runtime_error("bad shape: " + s);
}

DistanceRole distance_role_from(const std::string& s) {
  if (s == "side") return DistanceRole::Side;
  if (s == "diagonal") return DistanceRole::Diagonal;
  throw std::runtime_error("bad k role: " + s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error("bad boolean: " + s);
}

json coords_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({p.x.str(), p.y.str()});
  return a;
}

void check_class(const CatalogEntry& e, const std::string& stored) {
  if (stored != class_name(e.cls.kind)) {
    throw std::runtime_error("class '" + stored + "' does not match distances " + e.canonical.str());
  }
}

}  // namespace

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json to_json(const SearchConfig& c) {
  return {{"n", c.n},
          {"k", c.k},
          {"role", to_string(c.role)},
          {"dmax", c.dmax},
          {"shape", to_string(c.shape)},
          {"cyclic", c.require_cyclic},
          {"tangential", c.require_tangential},
          {"trapezoid", c.require_trapezoid},
          {"degenerate", c.include_degenerate},
          {"threads", c.threads},
          {"budget", c.budget}};
}

SearchConfig config_from_json(const json& j) {
  SearchConfig c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<std::int64_t>();
  c.role = role_filter_from(j.at("role").get<std::string>());
  c.dmax = j.at("dmax").get<std::int64_t>();
  c.shape = shape_filter_from(j.at("shape").get<std::string>());
  c.require_cyclic = j.at("cyclic").get<bool>();
  c.require_tangential = j.at("tangential").get<bool>();
  c.require_trapezoid = j.at("trapezoid").get<bool>();
  c.include_degenerate = j.value("degenerate", false);
  c.threads = j.at("threads").get<int>();
  c.budget = j.value("budget", std::uint64_t{0});
  return c;
}

json to_json(const CatalogEntry& e) {
  const auto& q = e.canonical;
  json roles = json::array();
  for (const auto& r : e.k_roles) roles.push_back({{"k", r.k}, {"role", to_string(r.role)}});
  return {{"distances", {{"ab", q.ab}, {"bc", q.bc}, {"cd", q.cd}, {"da", q.da}, {"ac", q.ac}, {"bd", q.bd}}},
          {"class", class_name(e.cls.kind)},
          {"flags",
           {{"cyclic", e.flags.cyclic},
            {"tangential", e.flags.tangential},
            {"trapezoid", e.flags.trapezoid},
            {"parallelogram", e.flags.parallelogram}}},
          {"k_roles", roles},
          {"radicand", e.radicand},
          {"coords", coords_json({e.coords.begin(), e.coords.end()})}};
}

CatalogEntry entry_from_json(const json& j) {
  CatalogEntry e;
  const auto& d = j.at("distances");
  e.canonical = {d.at("ab").get<std::int64_t>(), d.at("bc").get<std::int64_t>(), d.at("cd").get<std::int64_t>(),
                 d.at("da").get<std::int64_t>(), d.at("ac").get<std::int64_t>(), d.at("bd").get<std::int64_t>()};
  e.cls = classify(e.canonical);
  check_class(e, j.at("class").get<std::string>());
  const auto& f = j.at("flags");
  e.flags = {f.at("cyclic").get<bool>(), f.at("tangential").get<bool>(), f.at("trapezoid").get<bool>(),
             f.at("parallelogram").get<bool>()};
  for (const auto& r : j.at("k_roles")) {
    e.k_roles.push_back({r.at("k").get<std::int64_t>(), distance_role_from(r.at("role").get<std::string>())});
  }
  e.radicand = j.at("radicand").get<std::int64_t>();
  const auto& c = j.at("coords");
  if (c.size() != 4) throw std::runtime_error("expected four coordinate pairs");
  for (std::size_t i = 0; i < 4; ++i) {
    e.coords[i] = {Surd::parse(c[i].at(0).get<std::string>()), Surd::parse(c[i].at(1).get<std::string>())};
  }
  return e;
}

json entries_json(const std::vector<CatalogEntry>& entries) {
  json a = json::array();
  for (const auto& e : entries) a.push_back(to_json(e));
  return a;
}

std::string catalog_digest(const std::vector<CatalogEntry>& entries) {
  const std::string text = entries_json(entries).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

json to_json(const RunManifest& m) {
  return {{"tool", m.tool},         {"version", m.version}, {"config", to_json(m.config)},
          {"started", m.started},   {"finished", m.finished}, {"visited", m.visited},
          {"digest", m.digest},     {"complete", m.complete}};
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.tool = j.at("tool").get<std::string>();
  m.version = j.at("version").get<std::string>();
  m.config = config_from_json(j.at("config"));
  m.started = j.at("started").get<std::string>();
  m.finished = j.at("finished").get<std::string>();
  m.visited = j.at("visited").get<std::uint64_t>();
  m.digest = j.at("digest").get<std::string>();
  m.complete = j.at("complete").get<bool>();
  return m;
}

json to_json(const Catalog& c) { return {{"manifest", to_json(c.manifest)}, {"entries", entries_json(c.entries)}}; }

Catalog catalog_from_json(const json& j) {
  Catalog c;
  c.manifest = manifest_from_json(j.at("manifest"));
  for (const auto& e : j.at("entries")) c.entries.push_back(entry_from_json(e));
  return c;
}

std::string to_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "ab,bc,cd,da,ac,bd,class,cyclic,tangential,trapezoid,parallelogram,k_roles,radicand,coords\n";
  for (const auto& e : entries) {
    for (auto v : e.canonical.tuple()) os << v << ',';
    os << class_name(e.cls.kind) << ',' << std::boolalpha << e.flags.cyclic << ',' << e.flags.tangential << ','
       << e.flags.trapezoid << ',' << e.flags.parallelogram << ',';
    for (std::size_t i = 0; i < e.k_roles.size(); ++i) {
      os << (i ? ";" : "") << e.k_roles[i].k << ':' << to_string(e.k_roles[i].role);
    }
    os << ',' << e.radicand << ',';
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
      os << (i ? ";" : "") << e.coords[i].x.str() << ' ' << e.coords[i].y.str();
    }
    os << '\n';
  }
  return os.str();
}

std::vector<CatalogEntry> entries_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<CatalogEntry> out;
  if (!std::getline(is, line)) return out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 14) throw std::runtime_error("csv row must have 14 fields: " + line);
    CatalogEntry e;
    std::array<std::int64_t, 6> t{};
    for (int i = 0; i < 6; ++i) t[i] = std::stoll(f[i]);
    e.canonical = QuadDistances::from_tuple(t);
    e.cls = classify(e.canonical);
    check_class(e, f[6]);
    e.flags = {parse_bool(f[7]), parse_bool(f[8]), parse_bool(f[9]), parse_bool(f[10])};
    if (!f[11].empty()) {
      for (const auto& r : split(f[11], ';')) {
        const auto colon = r.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad k role: " + r);
        e.k_roles.push_back({std::stoll(r.substr(0, colon)), distance_role_from(r.substr(colon + 1))});
      }
    }
    e.radicand = std::stoll(f[12]);
    const auto pts = split(f[13], ';');
    if (pts.size() != 4) throw std::runtime_error("expected four coordinate pairs");
    for (std::size_t i = 0; i < 4; ++i) {
      const auto xy = split(pts[i], ' ');
      if (xy.size() != 2) throw std::runtime_error("bad coordinate pair: " + pts[i]);
      e.coords[i] = {Surd::parse(xy[0]), Surd::parse(xy[1])};
    }
    out.push_back(std::move(e));
  }
  return out;
}

json to_json(const PointSetRecord& r) {
  return {{"n", r.n}, {"distances", r.distances}, {"radicand", r.radicand}, {"coords", coords_json(r.coords)}};
}

json to_json(const ClaimReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pair_witnesses) pairs.push_back({p.a, p.b});
  json sets = json::array();
  for (const auto& s : r.pointset_witnesses) sets.push_back(to_json(s));
  return {{"claim_id", r.claim_id},
          {"statement", r.statement},
          {"config", to_json(r.config)},
          {"verdict", to_string(r.verdict)},
          {"expected", to_string(r.expected)},
          {"witnesses", entries_json(r.witnesses)},
          {"pointset_witnesses", sets},
          {"pair_witnesses", pairs},
          {"visited", r.visited},
          {"elapsed_s", r.elapsed.count()},
          {"note", r.note}};
}

std::string to_text(const ClaimReport& r) {
  std::ostringstream os;
  os << "claim: " << r.claim_id << '\n'
     << "statement: " << r.statement << '\n'
     << "dmax: " << r.config.dmax << '\n'
     << "verdict: " << to_string(r.verdict) << " (expected " << to_string(r.expected) << ")\n"
     << "visited: " << r.visited << '\n'
     << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  for (const auto& w : r.witnesses) {
    os << "witness: " << w.canonical << ' ' << class_name(w.cls.kind) << '\n';
  }
  for (const auto& s : r.pointset_witnesses) {
    os << "witness:";
    for (auto d : s.distances) os << ' ' << d;
    os << '\n';
  }
  for (const auto& p : r.pair_witnesses) os << "pair: (" << p.a << ',' << p.b << ")\n";
  return os.str();
}

json to_json(const Checkpoint& c) {
  return {{"manifest", to_json(c.manifest)},
          {"partitions_done", c.partitions_done},
          {"partitions_total", c.partitions_total},
          {"entries", entries_json(c.entries)}};
}

Checkpoint checkpoint_from_json(const json& j) {
  Checkpoint c;
  c.manifest = manifest_from_json(j.at("manifest"));
  c.partitions_done = j.at("partitions_done").get<std::size_t>();
  c.partitions_total = j.at("partitions_total").get<std::size_t>();
  for (const auto& e : j.at("entries")) c.entries.push_back(entry_from_json(e));
  if (catalog_digest(c.entries) != c.manifest.digest) {
    throw std::runtime_error("checkpoint digest mismatch");
  }
  return c;
}

}  // namespace dioph
