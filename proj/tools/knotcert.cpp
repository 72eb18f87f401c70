#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "knotcert/knotcert.hpp"

namespace {

using knotcert::Json;

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string braid;
  bool braid_given = false;
  int strands = 0;
  std::string pretzel;
  std::string pd_file;
};

struct Options {
  bool json = false;
  std::string out;
  std::uint64_t seed = 0x5eed;
  Input input;
  std::string equal;
  int rewrites = 0;
  std::vector<int> certify_args;
  std::vector<std::string> grid;
  std::string report_dir;
  bool self_test = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

knotcert::BraidWord braid_input(const Input& in) {
  if (!in.braid_given) throw UsageError("this command needs --braid and -n");
  if (in.strands < 1) throw UsageError("--braid needs a strand count -n >= 1");
  return knotcert::parse_braid(in.braid, in.strands);
}

knotcert::LinkDiagram diagram_input(const Input& in) {
  const int sources = int(in.braid_given) + int(!in.pretzel.empty()) + int(!in.pd_file.empty());
  if (sources != 1) throw UsageError("give exactly one of --braid, --pretzel, --pd");
  if (in.braid_given) return knotcert::braid_closure(braid_input(in));
  if (!in.pretzel.empty()) return knotcert::pretzel_diagram(knotcert::parse_pretzel(in.pretzel));
  return knotcert::parse_pd(read_file(in.pd_file));
}

// --------------------------------------------------------------------------

Json cmd_invariants(const Options& o, std::ostream& text) {
  const knotcert::LinkDiagram d = diagram_input(o.input);
  const knotcert::InvariantRecord rec = knotcert::invariant_record(d);
  Json j;
  auto put = [&](const char* key, const std::optional<long>& v) {
    j[key] = v ? Json(*v) : Json(nullptr);
  };
  j["crossings"] = rec.crossings;
  j["components"] = rec.components;
  j["writhe"] = rec.writhe;
  j["seifert_circles"] = rec.seifert_circles;
  j["det"] = rec.det.str();
  put("s", rec.s);
  put("sigma", rec.sigma);
  put("genus", rec.genus);
  put("slice_genus", rec.slice_genus);
  j["unavailable"] = Json::object();
  for (const auto& [field, why] : rec.notes) j["unavailable"][field] = why;

  auto show = [&](const char* label, const char* key, const std::optional<long>& v) {
    text << std::left << std::setw(16) << label;
    if (v)
      text << *v << '\n';
    else
      text << "unavailable (" << j["unavailable"].value(key, std::string("unknown")) << ")\n";
  };
  text << std::left << std::setw(16) << "crossings" << rec.crossings << '\n'
       << std::setw(16) << "components" << rec.components << '\n'
       << std::setw(16) << "writhe" << rec.writhe << '\n'
       << std::setw(16) << "seifert circles" << rec.seifert_circles << '\n'
       << std::setw(16) << "det" << rec.det << '\n';
  show("s", "s", rec.s);
  show("sigma", "sigma", rec.sigma);
  show("genus", "genus", rec.genus);
  show("slice genus", "slice_genus", rec.slice_genus);
  return j;
}

Json cmd_nf(const Options& o, std::ostream& text) {
  const knotcert::BraidWord w = braid_input(o.input);
  const knotcert::GarsideNormalForm nf = knotcert::normal_form(w);
  Json j;
  j["strands"] = w.strands();
  j["infimum"] = nf.infimum;
  j["factors"] = Json::array();
  for (const auto& f : nf.factors) j["factors"].push_back(f.reduced_word());
  j["normal_form"] = knotcert::to_string(nf);
  text << knotcert::to_string(nf) << '\n';

  if (!o.equal.empty()) {
    const knotcert::BraidWord other = knotcert::parse_braid(o.equal, w.strands());
    const bool eq = knotcert::braids_equal(w, other);
    j["equal"] = eq;
    text << (eq ? "equal" : "not equal") << '\n';
  }
  if (o.rewrites > 0) {
    std::mt19937_64 rng(o.seed);
    knotcert::BraidWord cur = w;
    int applied = 0;
    for (int k = 0; k < o.rewrites; ++k) applied += knotcert::random_relation_rewrite(cur, rng);
    const bool same = knotcert::normal_form(cur) == nf;
    j["rewrites"] = {{"seed", o.seed}, {"requested", o.rewrites}, {"applied", applied},
                     {"word", knotcert::to_string(cur)}, {"normal_form_preserved", same}};
    text << "rewrites " << applied << "/" << o.rewrites << " (seed " << o.seed << "): normal form "
         << (same ? "preserved" : "CHANGED") << '\n';
    if (!same) throw knotcert::Error("normal form changed under braid relations");
  }
  return j;
}

Json cmd_homfly(const Options& o, std::ostream& text) {
  const knotcert::BraidWord w = braid_input(o.input);
  const knotcert::LaurentPoly2 p = knotcert::homfly(w);
  const long bound = knotcert::mfw_bound(p);
  text << knotcert::to_string(p) << '\n' << "MFW braid index bound: " << bound << '\n';
  return {{"homfly", knotcert::to_string(p)}, {"mfw_bound", bound}};
}

// --------------------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range '" + s + "' must look like lo..hi");
  try {
    std::size_t a = 0, b = 0;
    const int lo = std::stoi(s.substr(0, dots), &a);
    const int hi = std::stoi(s.substr(dots + 2), &b);
    if (a != dots || b != s.size() - dots - 2 || lo > hi) throw UsageError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("range '" + s + "' must look like lo..hi with lo <= hi");
  }
}

std::string cell_validity(int first, int q) {
  if (first < 2) return "first parameter must be >= 2";
  if (q < 3 || q % 2 == 0) return "q must be odd and >= 3";
  return {};
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

void print_report_text(const knotcert::CertificateReport& rep, std::ostream& text) {
  text << "P(" << rep.parameters.first << "," << rep.parameters.second << "," << rep.parameters.second
       << ") family " << knotcert::to_string(rep.family) << '\n';
  for (const auto& s : rep.slopes) {
    text << "  r = " << std::setw(3) << s.r << " ";
    for (const auto& v : s.verdicts) text << " " << v.rule << ":" << knotcert::to_string(v.conclusion);
    text << '\n';
  }
  text << (rep.certified ? "certified: no Seifert fibered surgery" : "inconclusive") << '\n';
}

struct CertifyOutcome {
  Json json;
  int exit_code;
};

CertifyOutcome certify_single(const Options& o, std::ostream& text) {
  if (o.certify_args.size() != 2) throw UsageError("certify needs two parameters, e.g. 'certify 3 3'");
  const int first = o.certify_args[0], q = o.certify_args[1];
  if (const auto why = cell_validity(first, q); !why.empty()) throw UsageError(why);
  const knotcert::CertificateReport rep = knotcert::certify_no_sfs(first, q);
  print_report_text(rep, text);
  return {knotcert::to_json(rep), rep.certified ? kExitOk : kExitInconclusive};
}

CertifyOutcome certify_grid(const Options& o, std::ostream& text) {
  if (o.grid.size() != 2) throw UsageError("--grid takes two ranges: pmin..pmax qmin..qmax");
  const auto [p0, p1] = parse_range(o.grid[0]);
  const auto [q0, q1] = parse_range(o.grid[1]);
  if (static_cast<long>(p1 - p0 + 1) * (q1 - q0 + 1) > 10000) throw UsageError("grid has more than 10000 cells");

  struct Cell {
    int p, q;
    std::string skipped;
    std::future<knotcert::CertificateReport> report;
  };
  std::vector<Cell> cells;
  for (int p = p0; p <= p1; ++p)
    for (int q = q0; q <= q1; ++q) {
      Cell c{p, q, cell_validity(p, q), {}};
      if (c.skipped.empty()) c.report = std::async(std::launch::async, knotcert::certify_no_sfs, p, q);
      cells.push_back(std::move(c));
    }

  if (!o.report_dir.empty()) std::filesystem::create_directories(o.report_dir);
  Json summary = Json::array();
  int valid = 0, certified = 0;
  text << std::left << std::setw(6) << "p" << std::setw(6) << "q" << "result\n";
  for (auto& c : cells) {
    Json row{{"p", c.p}, {"q", c.q}};
    text << std::setw(6) << c.p << std::setw(6) << c.q;
    if (!c.skipped.empty()) {
      row["result"] = "skipped";
      row["reason"] = c.skipped;
      text << "skipped (" << c.skipped << ")\n";
    } else {
      const knotcert::CertificateReport rep = c.report.get();
      ++valid;
      certified += rep.certified;
      row["result"] = rep.certified ? "certified" : "inconclusive";
      text << (rep.certified ? "certified" : "inconclusive") << '\n';
      if (!o.report_dir.empty()) {
        const auto path = std::filesystem::path(o.report_dir) /
                          ("P_" + std::to_string(c.p) + "_" + std::to_string(c.q) + ".json");
        write_json_file(path, knotcert::to_json(rep));
        row["report"] = path.string();
      }
    }
    summary.push_back(std::move(row));
  }
  if (valid == 0) throw UsageError("no grid cell satisfies the hypotheses");
  text << certified << "/" << valid << " cells certified\n";
  return {{{"cells", summary}, {"certified", certified}, {"valid", valid}},
          certified == valid ? kExitOk : kExitInconclusive};
}

CertifyOutcome certify_self_test(std::ostream& text) {
  const knotcert::ExclusionVerdict v = knotcert::exclude_torus_knot(knotcert::torus_braid(4, 7), 7);
  const bool over_fired = v.excluded();
  text << "torus T(4,7) through the torus-knot rule: " << knotcert::to_string(v.conclusion)
       << (over_fired ? " (OVER-FIRED)" : " (ok, the rule does not exclude a true torus knot)") << '\n';
  return {{{"rule", v.rule}, {"evidence", v.evidence}, {"conclusion", knotcert::to_string(v.conclusion)},
           {"over_fired", over_fired}},
          over_fired ? kExitInternal : kExitOk};
}

CertifyOutcome cmd_certify(const Options& o, std::ostream& text) {
  const int modes = int(!o.certify_args.empty()) + int(!o.grid.empty()) + int(o.self_test);
  if (modes != 1) throw UsageError("certify takes either 'p q', --grid, or --self-test");
  if (!o.report_dir.empty() && o.grid.empty()) throw UsageError("--report-dir only applies to --grid");
  if (o.self_test) return certify_self_test(text);
  if (!o.grid.empty()) return certify_grid(o, text);
  return certify_single(o, text);
}

// --------------------------------------------------------------------------

void add_input_options(CLI::App* cmd, Input& in, bool diagrams) {
  cmd->add_option("--braid", in.braid, "braid word: signed generator indices, e.g. \"1 1 1\"")
      ->each([&in](const std::string&) { in.braid_given = true; });
  cmd->add_option("-n,--strands", in.strands, "number of strands");
  if (diagrams) {
    cmd->add_option("--pretzel", in.pretzel, "pretzel parameters a1,a2,...");
    cmd->add_option("--pd", in.pd_file, "file with a PD code");
  }
}

void emit(const Options& o, const Json& j, const std::string& text) {
  std::string body = o.json ? j.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.out);
    if (!out) throw UsageError("cannot write '" + o.out + "'");
    out << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"knotcert: knot invariants and surgery obstruction certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "print JSON instead of text");
  app.add_option("--out", o.out, "write output to this file");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  CLI::App* inv = app.add_subcommand("invariants", "invariants of a braid closure, pretzel or PD code");
  add_input_options(inv, o.input, true);

  CLI::App* nf = app.add_subcommand("nf", "Garside left normal form of a braid");
  add_input_options(nf, o.input, false);
  nf->add_option("--equal", o.equal, "second word to compare against");
  nf->add_option("--rewrites", o.rewrites, "apply this many random braid relations and recheck")
      ->check(CLI::NonNegativeNumber);

  CLI::App* hf = app.add_subcommand("homfly", "HOMFLY polynomial of a braid closure and the MFW bound");
  add_input_options(hf, o.input, false);

  CLI::App* cert = app.add_subcommand("certify", "certify that P(p,q,q) has no Seifert fibered surgery");
  cert->add_option("params", o.certify_args, "p q (p >= 2, odd q >= 3)");
  cert->add_option("--grid", o.grid, "pmin..pmax qmin..qmax")->expected(2);
  cert->add_option("--report-dir", o.report_dir, "write one JSON report per grid cell here");
  cert->add_flag("--self-test", o.self_test, "run the torus-knot rule on T(4,7); it must not exclude it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream text;
  try {
    CertifyOutcome res{Json(), kExitOk};
    if (inv->parsed())
      res.json = cmd_invariants(o, text);
    else if (nf->parsed())
      res.json = cmd_nf(o, text);
    else if (hf->parsed())
      res.json = cmd_homfly(o, text);
    else
      res = cmd_certify(o, text);
    emit(o, res.json, text.str());
    return res.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotcert::MalformedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotcert::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotcert::Unsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotcert::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
