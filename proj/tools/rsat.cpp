// Command-line surface: construct families, verify saturation, replay
// witness tables, and run the exhaustive search.  Reports are JSON on
// stdout; re-running a command on the same inputs yields an identical
// report except for wall_time_ms (drop it with --stable).
//
// Exit codes: 0 success/pass, 1 verified-false, 2 input error, 3 budget
// exhaustion.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsat/families.hpp"
#include "rsat/graph6.hpp"
#include "rsat/report.hpp"
#include "rsat/search.hpp"
#include "rsat/structure.hpp"
#include "rsat/verifier.hpp"
#include "rsat/witness_io.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kExitPass = 0;
constexpr int kExitVerifiedFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

using nlohmann::json;

std::string read_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
}

std::string fnv1a64_hex(const std::string& bytes) {
        std::uint64_t hash = 0xcbf29ce484222325ull;
        for (unsigned char c : bytes) {
                hash ^= c;
                hash *= 0x100000001b3ull;
        }
        char out[17];
        std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
        return out;
}

struct ReportClock {
        std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

        long long elapsed_ms() const {
                return std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                    .count();
        }
};

json base_report(int argc, char** argv) {
        json out;
        out["schema_version"] = rsat::kReportSchemaVersion;
        out["tool"] = {{"name", "rsat"}, {"version", kToolVersion}};
        std::string echo;
        for (int i = 0; i < argc; ++i) {
                if (i) echo += ' ';
                echo += argv[i];
        }
        out["command"] = echo;
        out["inputs"] = json::object();
        return out;
}

void finish_report(json& report, const ReportClock& clock, bool stable) {
        if (!stable) report["wall_time_ms"] = clock.elapsed_ms();
        std::cout << report.dump(2) << "\n";
}

rsat::SimpleGraph load_graph(const std::string& path, json& report) {
        std::string bytes = read_file(path);
        report["inputs"][path] = fnv1a64_hex(bytes);
        // strip one trailing newline from `.g6` files
        while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.pop_back();
        return rsat::decode_graph6(bytes);
}

std::array<int, 4> parse_quad(const std::string& csv, const std::string& what) {
        std::array<int, 4> out{};
        std::stringstream ss(csv);
        std::string item;
        int i = 0;
        while (std::getline(ss, item, ',')) {
                if (i >= 4) throw CLI::ValidationError(what + " needs exactly 4 integers");
                out[i++] = std::stoi(item);
        }
        if (i != 4) throw CLI::ValidationError(what + " needs exactly 4 integers");
        return out;
}

json designated_json(const rsat::FamilyInstance& inst) {
        json out = json::object();
        for (const auto& [name, verts] : inst.designated) out[name] = verts;
        return out;
}

int default_jobs() {
        if (const char* env = std::getenv("RSAT_JOBS")) {
                int v = std::atoi(env);
                if (v >= 1) return v;
        }
        return 1;
}

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
        std::string family;
        int n = 0;
        int r = 8;
        int q = 1;
        int p = 3;
        std::string shape = "plain";
        std::string partition;
        std::string attach;
        int n1 = -1;
        int n2 = -1;
        std::string out_dir = ".";
        std::string prefix;
        bool stable = false;
};

rsat::FamilySpec spec_from_args(const ConstructArgs& args) {
        using namespace rsat;
        auto partition_or_default = [&](int total) {
                return args.partition.empty() ? default_partition(total)
                                              : parse_quad(args.partition, "--partition");
        };
        if (args.family == "m") return MSpec{args.n};
        if (args.family == "w") return WSpec{args.n};
        if (args.family == "omega") return OmegaSpec{args.n, partition_or_default(args.n)};
        if (args.family == "xi") {
                std::array<int, 4> a = args.attach.empty() ? std::array<int, 4>{0, 0, 0, 0}
                                                           : parse_quad(args.attach, "--a");
                int residual = args.n - 3 * (a[0] + a[1] + a[2] + a[3]);
                return XiSpec{args.n, a, partition_or_default(residual)};
        }
        if (args.family == "s") return SSpec{args.n};
        if (args.family == "gamma") {
                int n1 = args.n1 > 0 ? args.n1 : (args.n + 1) / 2;
                int n2 = args.n2 > 0 ? args.n2 : args.n - n1;
                return GammaSpec{args.n, n1, n2};
        }
        if (args.family == "gamma_r") return GammaRSpec{args.n, args.r};
        if (args.family == "kstar") return KStarSpec{args.r};
        if (args.family == "t") return TSpec{args.n, args.r};
        if (args.family == "friendship") {
                FriendshipShape shape = args.shape == "bar"     ? FriendshipShape::bar
                                        : args.shape == "tilde" ? FriendshipShape::tilde
                                                                : FriendshipShape::plain;
                return FriendshipSpec{shape, args.q, args.p};
        }
        throw CLI::ValidationError("unknown family '" + args.family + "'");
}

int cmd_construct(const ConstructArgs& args, int argc, char** argv) {
        ReportClock clock;
        json report = base_report(argc, argv);
        rsat::FamilyInstance inst = rsat::build_instance(spec_from_args(args));
        std::string prefix = args.prefix.empty() ? inst.name : args.prefix;
        std::string g6_path = args.out_dir + "/" + prefix + ".g6";
        std::string cols_path = args.out_dir + "/" + prefix + ".cols";
        write_file(g6_path, rsat::encode_graph6(inst.graph()) + "\n");
        write_file(cols_path, rsat::format_coloring(inst.colored.coloring));

        json summary;
        summary["family"] = inst.name;
        summary["n"] = inst.graph().n();
        summary["e"] = inst.graph().edge_count();
        summary["designated"] = designated_json(inst);
        json class_sizes = json::object();
        for (const auto& [c, cls] : inst.colored.coloring.classes())
                class_sizes[std::to_string(cls.size())] =
                    class_sizes.value(std::to_string(cls.size()), 0) + 1;
        summary["color_class_sizes"] = class_sizes;
        summary["graph_file"] = g6_path;
        summary["coloring_file"] = cols_path;
        report["construct"] = summary;
        finish_report(report, clock, args.stable);
        return kExitPass;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
        std::string graph_path;
        std::string coloring_path;
        bool rainbow = false;
        int r = 0;
        int jobs = 1;
        bool evidence = false;
        bool stable = false;
};

int cmd_verify(const VerifyArgs& args, int argc, char** argv) {
        ReportClock clock;
        json report = base_report(argc, argv);
        rsat::SimpleGraph g = load_graph(args.graph_path, report);
        if (args.rainbow && !args.coloring_path.empty())
                throw std::runtime_error("give either a coloring file or --rainbow, not both");
        rsat::EdgeColoring coloring;
        if (args.rainbow) {
                coloring = rsat::rainbow_coloring(g);
        } else {
                if (args.coloring_path.empty())
                        throw std::runtime_error("provide a coloring file or --rainbow");
                std::string bytes = read_file(args.coloring_path);
                report["inputs"][args.coloring_path] = fnv1a64_hex(bytes);
                coloring = rsat::parse_coloring(bytes, g);
        }
        rsat::ColoredGraph cg{g, coloring};
        rsat::VerifyOptions opts;
        opts.jobs = args.jobs;
        opts.collect_evidence = args.evidence;

        report["graph"] = {{"n", g.n()}, {"e", g.edge_count()}, {"r", args.r}};
        rsat::SaturationReport sat = rsat::is_rainbow_saturated(cg, args.r, opts);
        report["saturation"] = rsat::to_json(sat);
        json structure;
        structure["degree_two"] = rsat::to_json(rsat::classify_degree_two(g));
        structure["suspension_audit"] = rsat::to_json(rsat::audit_suspensions(g));
        report["structure"] = structure;
        report["bounds"] = rsat::to_json(rsat::audit_bounds(g, args.r, coloring.is_rainbow()));
        finish_report(report, clock, args.stable);
        return sat.saturated() ? kExitPass : kExitVerifiedFalse;
}

// --- witness -----------------------------------------------------------------

struct WitnessArgs {
        std::string graph_path;
        std::string witness_path;
        bool stable = false;
};

int cmd_witness(const WitnessArgs& args, int argc, char** argv) {
        ReportClock clock;
        json report = base_report(argc, argv);
        rsat::SimpleGraph g = load_graph(args.graph_path, report);
        std::string bytes = read_file(args.witness_path);
        report["inputs"][args.witness_path] = fnv1a64_hex(bytes);
        std::vector<rsat::WitnessEntry> entries = rsat::parse_witness_file(bytes);

        json outcomes = json::array();
        bool all_ok = true;
        for (const rsat::WitnessEntry& entry : entries) {
                rsat::WitnessCheckResult res =
                    rsat::verify_witness_table(g, entry.nonedge, entry.paths, entry.mode);
                json item;
                item["nonedge"] = rsat::to_json(entry.nonedge);
                item["mode"] = entry.mode == rsat::WitnessMode::edge_cover ? "cover" : "pair";
                item["paths"] = entry.paths.size();
                item["pass"] = res.ok;
                if (!res.ok) {
                        item["reason"] = res.reason;
                        if (res.path_index >= 0) item["path_index"] = res.path_index;
                        if (res.step >= 0) item["step"] = res.step;
                        all_ok = false;
                }
                outcomes.push_back(item);
        }
        report["witness"] = outcomes;
        report["pass"] = all_ok;
        finish_report(report, clock, args.stable);
        return all_ok ? kExitPass : kExitVerifiedFalse;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
        int n = 0;
        int r = 0;
        std::string mode = "all";
        int max_m = -1;
        int min_m = -1;
        int jobs = 1;
        std::string resume_path;
        std::string out_dir;
        bool override_cap = false;
        bool stable = false;
};

int cmd_search(const SearchArgs& args, int argc, char** argv) {
        ReportClock clock;
        json report = base_report(argc, argv);
        rsat::SearchTask task;
        task.n = args.n;
        task.r = args.r;
        task.mode = args.mode == "rainbow" ? rsat::SearchMode::rainbow_only
                                           : rsat::SearchMode::all_colorings;
        task.max_m = args.max_m;
        task.min_m = args.min_m;
        task.jobs = args.jobs;
        task.override_n_cap = args.override_cap;

        std::optional<rsat::SearchCheckpoint> resume;
        rsat::CheckpointSink sink;
        if (!args.resume_path.empty()) {
                if (std::ifstream probe(args.resume_path); probe.good()) {
                        std::string bytes = read_file(args.resume_path);
                        report["inputs"][args.resume_path] = fnv1a64_hex(bytes);
                        resume = rsat::checkpoint_from_json(json::parse(bytes));
                }
                std::string path = args.resume_path;
                sink = [path](const rsat::SearchCheckpoint& cp) {
                        write_file(path, rsat::to_json(cp).dump(2) + "\n");
                };
        }

        rsat::SearchResult result = rsat::compute_rsat(task, resume, sink);
        report["search"] = rsat::to_json(result);
        if (!args.out_dir.empty()) {
                for (size_t i = 0; i < result.certificates.size(); ++i) {
                        char tag[32];
                        std::snprintf(tag, sizeof(tag), "cert_%03zu", i);
                        write_file(args.out_dir + "/" + tag + ".g6",
                                   result.certificates[i].graph6 + "\n");
                        write_file(args.out_dir + "/" + tag + ".cols",
                                   result.certificates[i].coloring);
                }
                report["search"]["certificate_dir"] = args.out_dir;
        }
        finish_report(report, clock, args.stable);
        return result.value ? kExitPass : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
        CLI::App app{"cycle rainbow saturation toolkit"};
        app.set_version_flag("--version", kToolVersion);
        app.require_subcommand(1);

        ConstructArgs cons;
        CLI::App* construct = app.add_subcommand(
            "construct", "build a family instance and write graph6 + coloring files");
        construct
            ->add_option("--family", cons.family,
                         "m | w | omega | xi | s | gamma | gamma_r | kstar | t | friendship")
            ->required();
        construct->add_option("--n", cons.n, "vertex count");
        construct->add_option("--r", cons.r, "cycle length parameter (gamma_r, kstar, t)");
        construct->add_option("--q", cons.q, "friendship block count");
        construct->add_option("--p", cons.p, "friendship clique order");
        construct->add_option("--shape", cons.shape, "friendship shape: plain | bar | tilde");
        construct->add_option("--partition", cons.partition, "omega/xi block orders, e.g. 6,3,3,3");
        construct->add_option("--a", cons.attach, "xi triangle counts, e.g. 1,0,0,0");
        construct->add_option("--n1", cons.n1, "gamma first block order");
        construct->add_option("--n2", cons.n2, "gamma second block order");
        construct->add_option("--out", cons.out_dir, "output directory (default .)");
        construct->add_option("--prefix", cons.prefix, "output file prefix (default family name)");
        construct->add_flag("--stable", cons.stable, "omit wall time from the report");

        VerifyArgs ver;
        ver.jobs = default_jobs();
        CLI::App* verify = app.add_subcommand("verify", "decide rainbow saturation of graph files");
        verify->add_option("graph", ver.graph_path, "graph6 file")->required();
        verify->add_option("coloring", ver.coloring_path, "coloring file (u v c lines)");
        verify->add_flag("--rainbow", ver.rainbow, "use the rainbow coloring");
        verify->add_option("--r", ver.r, "cycle length")->required();
        verify->add_option("--jobs", ver.jobs, "parallel nonedge workers (env RSAT_JOBS)");
        verify->add_flag("--evidence", ver.evidence, "collect per-nonedge cycle evidence");
        verify->add_flag("--stable", ver.stable, "omit wall time from the report");

        WitnessArgs wit;
        CLI::App* witness = app.add_subcommand("witness", "replay a witness table against a graph");
        witness->add_option("graph", wit.graph_path, "graph6 file")->required();
        witness->add_option("witness", wit.witness_path, "witness table file")->required();
        witness->add_flag("--stable", wit.stable, "omit wall time from the report");

        SearchArgs sea;
        sea.jobs = default_jobs();
        CLI::App* search = app.add_subcommand("search", "exhaustive saturation number search");
        search->add_option("--n", sea.n, "vertex count")->required();
        search->add_option("--r", sea.r, "cycle length")->required();
        search->add_option("--mode", sea.mode, "all | rainbow")->required();
        search->add_option("--max-m", sea.max_m, "edge budget upper end");
        search->add_option("--min-m", sea.min_m, "edge budget lower end (default n)");
        search->add_option("--jobs", sea.jobs, "worker count (env RSAT_JOBS)");
        search->add_option("--resume", sea.resume_path, "checkpoint file to resume from/write to");
        search->add_option("--out", sea.out_dir, "directory for certificate files");
        search->add_flag("--override-cap", sea.override_cap, "lift the default order cap");
        search->add_flag("--stable", sea.stable, "omit wall time from the report");

        try {
                app.parse(argc, argv);
                if (construct->parsed()) return cmd_construct(cons, argc, argv);
                if (verify->parsed()) return cmd_verify(ver, argc, argv);
                if (witness->parsed()) return cmd_witness(wit, argc, argv);
                return cmd_search(sea, argc, argv);
        } catch (const CLI::ParseError& e) {
                int code = app.exit(e);
                return code == 0 ? 0 : kExitInputError;
        } catch (const rsat::BudgetError& e) {
                std::cerr << "budget: " << e.what() << "\n";
                return kExitBudget;
        } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInputError;
        }
}
