#pragma once

// Command-line front end.  Subcommands mirror the library one to one and
// print to a caller-supplied stream so tests can run them in process.
//
// Exit codes: 0 success (and verified, where applicable), 1 a mathematical
// verification failed, 2 usage or input error, 3 resource ceiling hit.
// Verification subcommands end with a line "VERIFIED" or "FAILED: <reason>".

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grahamlab/caterpillar.hpp"
#include "grahamlab/graham.hpp"
#include "grahamlab/graph.hpp"
#include "grahamlab/partitions.hpp"
#include "grahamlab/polynomial.hpp"
#include "grahamlab/pte.hpp"
#include "grahamlab/treegen.hpp"
#include "grahamlab/weights.hpp"

namespace grahamlab::cli {

struct RunConfig {
  std::string output = "text";  // text | json | csv
  std::filesystem::path cache_dir;
  ResourceLimits limits;
  int parallelism = 1;
  bool stats = false;
};

namespace detail {

inline std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline void csv_rows(std::ostream& out, const std::string& prefix,
                     const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || value.is_array())
        csv_rows(out, path, value);
      else
        out << path << ",," << csv_cell(value) << "\n";
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& value = j[i];
      if (value.is_object() || value.is_array())
        csv_rows(out, prefix + "[" + std::to_string(i) + "]", value);
      else
        out << prefix << "," << i << "," << csv_cell(value) << "\n";
    }
  } else {
    out << prefix << ",," << csv_cell(j) << "\n";
  }
}

inline void emit(const RunConfig& cfg, std::ostream& out, const nlohmann::ordered_json& obj,
                 const std::function<void(std::ostream&)>& text) {
  if (cfg.output == "json") {
    out << obj.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "object,index,value\n";
    csv_rows(out, "", obj);
  } else {
    text(out);
  }
}

inline std::string join_u32(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

inline std::string join_terms(const std::vector<Int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i].str();
  }
  return s;
}

// Picks the lexicographically first cache file that covers (depth, n).
struct CacheProbe {
  std::optional<std::filesystem::path> file;
  std::optional<WtTable> table;
  bool hit = false;
};

inline CacheProbe probe_cache(const std::filesystem::path& dir, int depth, std::uint32_t n) {
  CacheProbe probe;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return probe;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".wtcache")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    WtTable table = wt_cache_load(path);
    if (table.covers(depth, n)) {
      probe.file = path;
      probe.table = std::move(table);
      probe.hit = true;
      return probe;
    }
  }
  return probe;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("GRAHAMLAB_CACHE"))
    cfg.cache_dir = env;
  else
    cfg.cache_dir = ".grahamlab-cache";

  CLI::App app{"Iterated line graphs, Graham tree classes, and PTE caterpillar families"};
  app.fallthrough(true);
  app.require_subcommand(1);
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Weight-table cache directory");
  app.add_option("--vertex-ceiling", cfg.limits.vertex_ceiling, "Largest graph to materialize")
      ->capture_default_str();
  app.add_option("--edge-ceiling", cfg.limits.edge_ceiling, "Largest edge set to materialize")
      ->capture_default_str();
  app.add_option("--parallelism", cfg.parallelism, "Worker thread bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--stats", cfg.stats, "Report cache statistics");

  std::function<int()> action;

  // ---- pte ----
  auto* pte_cmd = app.add_subcommand("pte", "Prouhet-Tarry-Escott splits");
  {
    auto* gen = pte_cmd->add_subcommand("gen", "Emit the level-k split");
    auto k = std::make_shared<int>(0);
    gen->add_option("--k", *k, "Split level")->required();
    gen->callback([&, k] {
      action = [&, k]() {
        PtePair p = pte_split(*k);  // recursion vs digit parity asserted inside
        nlohmann::ordered_json obj{{"k", p.k}, {"t", p.t_set}, {"t_bar", p.t_bar}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << "k: " << p.k << "\n";
          o << "T: " << detail::join_u32(p.t_set) << "\n";
          o << "T_bar: " << detail::join_u32(p.t_bar) << "\n";
        });
        out << "VERIFIED\n";
        return 0;
      };
    });

    auto* defect = pte_cmd->add_subcommand("defect", "Power-sum defect S_{k+j}");
    auto dk = std::make_shared<int>(0);
    auto dj = std::make_shared<int>(0);
    defect->add_option("--k", *dk, "Split level")->required();
    defect->add_option("--j", *dj, "Exponent offset")->required();
    defect->callback([&, dk, dj] {
      action = [&, dk, dj]() {
        Int value = pte_defect(*dk, *dj);
        Int bound = factorial(*dk + *dj) * pow2((*dk + *dj + 1) * (*dk + *dj) / 2);
        if (*dj == 0 && value != pte_defect_formula(*dk))
          throw verification_error("defect at j=0 differs from (-1)^{k+1} k! 2^{C(k,2)}");
        if (int_abs(value) > bound)
          throw verification_error("defect exceeds the (k+j)! 2^{C(k+j+1,2)} bound");
        nlohmann::ordered_json obj{
            {"k", *dk}, {"j", *dj}, {"defect", value.str()}, {"bound", bound.str()}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << "defect: " << value.str() << "\n";
          o << "bound: " << bound.str() << "\n";
        });
        out << "VERIFIED\n";
        return 0;
      };
    });
  }

  // ---- w ----
  auto* w_cmd = app.add_subcommand("w", "Block-concatenated PTE sequences");
  {
    auto* build = w_cmd->add_subcommand("build", "Emit W(k; r, s, t)");
    auto p = std::make_shared<std::array<int, 4>>();
    build->add_option("--k", (*p)[0], "Split level")->required();
    build->add_option("--r", (*p)[1], "Leading T_bar blocks")->required();
    build->add_option("--s", (*p)[2], "Leading T blocks")->required();
    build->add_option("--t", (*p)[3], "Shifted T_bar blocks")->required();
    build->callback([&, p] {
      action = [&, p]() {
        auto [k, r, s, t] = *p;
        Composition comp = w_sequence(k, r, s, t);
        Int sum = comp.sum();
        Int want = w_sum_closed_form(k, r + s);
        if (sum != want)
          throw verification_error("sum " + sum.str() + " differs from closed form " + want.str());
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const auto& x : comp.parts) parts.push_back(x.str());
        nlohmann::ordered_json obj{{"k", k},     {"r", r},
                                   {"s", s},     {"t", t},
                                   {"parts", parts}, {"length", comp.length()},
                                   {"sum", sum.str()}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << comp.to_string() << "\n";
          o << "length: " << comp.length() << "\n";
          o << "sum: " << sum.str() << "\n";
        });
        out << "VERIFIED\n";
        return 0;
      };
    });

    auto* family = w_cmd->add_subcommand("family", "Emit the full chain with r+s=sigma");
    auto fk = std::make_shared<int>(0);
    auto fsigma = std::make_shared<int>(0);
    family->add_option("--k", *fk, "Split level")->required();
    family->add_option("--sigma", *fsigma, "Row sum r+s")->required();
    family->callback([&, fk, fsigma] {
      action = [&, fk, fsigma]() {
        auto fam = w_family(*fk, *fsigma);  // equal length and sum asserted inside
        for (std::size_t i = 0; i + 1 < fam.size(); ++i)
          if (!block_swap_shift(fam[i], fam[i + 1], *fk))
            throw verification_error("members " + std::to_string(i) + " and " +
                                     std::to_string(i + 1) +
                                     " do not differ by one T/T_bar block swap");
        nlohmann::ordered_json obj = w_family_to_json(*fk, *fsigma, fam);
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          for (const auto& m : fam)
            o << "(" << m.r << "," << m.s << "," << m.t << "): " << m.comp.to_string() << "\n";
          o << "members: " << fam.size() << "\n";
          o << "sum: " << fam.front().comp.sum().str() << "\n";
        });
        out << "VERIFIED\n";
        return 0;
      };
    });
  }

  // ---- tree ----
  auto* tree_cmd = app.add_subcommand("tree", "Graham sequences of trees");
  {
    auto* seq = tree_cmd->add_subcommand("seq", "Size sequence of an edge-list tree");
    auto input = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(0);
    auto method = std::make_shared<std::string>("auto");
    seq->add_option("--input", *input, "Edge-list file")->required();
    seq->add_option("--depth", *depth, "Deepest level")->required();
    seq->add_option("--method", *method, "auto|direct|shadow")
        ->check(CLI::IsMember({"auto", "direct", "shadow"}));
    seq->callback([&, input, depth, method] {
      action = [&, input, depth, method]() {
        std::ifstream in(*input);
        if (!in) throw std::invalid_argument("cannot open " + *input);
        Graph g = parse_edge_list(in);
        if (!is_tree(g)) throw std::invalid_argument("input graph is not a tree");
        SeqMethod m = parse_seq_method(*method);
        detail::CacheProbe probe;
        if (m != SeqMethod::Direct)
          probe = detail::probe_cache(cfg.cache_dir, *depth, g.vertex_count);
        GrahamSequence s =
            graham_sequence(g, *depth, m, probe.table ? &*probe.table : nullptr, cfg.limits);
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& t : s.terms) terms.push_back(t.str());
        nlohmann::ordered_json obj{{"n", g.vertex_count},
                                   {"depth", *depth},
                                   {"method", *method},
                                   {"terms", terms}};
        if (cfg.stats)
          obj["stats"] = {{"cache_hit", probe.hit},
                          {"cache_file", probe.file ? probe.file->string() : ""}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << detail::join_terms(s.terms) << "\n";
        });
        if (cfg.stats && cfg.output != "json") {
          out << "stats: cache_hit=" << (probe.hit ? "true" : "false");
          if (probe.file) out << " cache_file=" << probe.file->string();
          out << "\n";
        }
        return 0;
      };
    });

    auto* classes = tree_cmd->add_subcommand("classes", "Census of sequence classes");
    auto cn = std::make_shared<int>(0);
    auto cdepth = std::make_shared<int>(0);
    classes->add_option("--n", *cn, "Tree size")->required();
    classes->add_option("--depth", *cdepth, "Sequence depth")->required();
    classes->callback([&, cn, cdepth] {
      action = [&, cn, cdepth]() {
        ClassReport rep = graham_classes(*cn, *cdepth, cfg.parallelism, cfg.limits);
        detail::emit(cfg, out, class_report_to_json(rep), [&](std::ostream& o) {
          o << "n: " << rep.n << "\n";
          o << "depth: " << rep.depth << "\n";
          o << "tree_count: " << rep.tree_count << "\n";
          o << "class_count: " << rep.class_count << "\n";
          if (rep.collisions.empty()) {
            o << "collisions: none\n";
          } else {
            for (const auto& group : rep.collisions) {
              o << "collision:";
              for (const auto& code : group) o << " " << code.hex();
              o << "\n";
            }
          }
        });
        return 0;
      };
    });
  }

  // ---- wt ----
  auto* wt_cmd = app.add_subcommand("wt", "Shadow-weight tables");
  {
    auto* table_cmd = wt_cmd->add_subcommand("table", "Build and cache a weight table");
    auto tk = std::make_shared<int>(0);
    auto tmax = std::make_shared<int>(0);
    table_cmd->add_option("--k", *tk, "Deepest level")->required();
    table_cmd->add_option("--max-vertices", *tmax, "Largest tree to tabulate")->required();
    table_cmd->callback([&, tk, tmax] {
      action = [&, tk, tmax]() {
        if (*tmax > *tk + 1)
          err << "warning: max-vertices clamped to k+1 = " << (*tk + 1)
              << " (larger trees have weight 0)\n";
        WtTable table = build_wt_table(*tk, *tmax, cfg.limits);
        std::filesystem::create_directories(cfg.cache_dir);
        std::filesystem::path path =
            cfg.cache_dir / ("wt_k" + std::to_string(table.built_k) + "_m" +
                             std::to_string(table.max_vertices) + ".wtcache");
        wt_cache_store(table, path);
        std::size_t nonzero = 0;
        for (const auto& [key, wt] : table.entries) nonzero += wt != 0;
        nlohmann::ordered_json obj{{"k", table.built_k},
                                   {"max_vertices", table.max_vertices},
                                   {"entries", table.entries.size()},
                                   {"nonzero_entries", nonzero},
                                   {"path", path.string()}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << "k: " << table.built_k << "\n";
          o << "max_vertices: " << table.max_vertices << "\n";
          o << "entries: " << table.entries.size() << "\n";
          o << "nonzero_entries: " << nonzero << "\n";
          o << "path: " << path.string() << "\n";
        });
        return 0;
      };
    });
  }

  // ---- family ----
  auto* family_cmd = app.add_subcommand("family", "PTE caterpillar families");
  {
    auto* build = family_cmd->add_subcommand("build", "Build and verify a split family");
    auto bk = std::make_shared<int>(0);
    auto bsigma = std::make_shared<int>(0);
    auto bpad = std::make_shared<int>(0);
    build->add_option("--k", *bk, "Agreement depth")->required();
    build->add_option("--sigma", *bsigma, "Family chain parameter")->required();
    build->add_option("--pad", *bpad, "Extra spine length for every member");
    build->callback([&, bk, bsigma, bpad] {
      action = [&, bk, bsigma, bpad]() {
        FamilySpec spec;
        spec.k = *bk;
        spec.sigma = *bsigma;
        spec.pad = *bpad;
        FamilyReport rep = build_family(spec, cfg.parallelism, cfg.limits);
        detail::emit(cfg, out, family_report_to_json(rep), [&](std::ostream& o) {
          o << "k: " << rep.k << " sigma: " << rep.sigma << " spacing: " << rep.spacing
            << " pad: " << rep.pad << "\n";
          for (const auto& m : rep.members)
            o << format_caterpillar_spec(m.cat) << " -> " << detail::join_terms(m.seq.terms)
              << "\n";
          o << "expected_step: " << rep.expected_step.str() << "\n";
        });
        if (!rep.verified) {
          out << "FAILED: " << rep.failure << "\n";
          return 1;
        }
        out << "VERIFIED\n";
        return 0;
      };
    });
  }

  // ---- partitions ----
  auto* partitions_cmd = app.add_subcommand("partitions", "Values over integer partitions");
  {
    auto* count = partitions_cmd->add_subcommand("count", "Distinct sums of f over partitions");
    auto pn = std::make_shared<int>(0);
    auto ppoly = std::make_shared<std::string>();
    count->add_option("--n", *pn, "Partitioned integer")->required();
    count->add_option("--poly", *ppoly, "Polynomial, highest degree first")->required();
    count->callback([&, pn, ppoly] {
      action = [&, pn, ppoly]() {
        Polynomial f = Polynomial::parse(*ppoly);
        std::size_t distinct = distinct_fhat_count(f, *pn, cfg.parallelism);
        nlohmann::ordered_json obj{{"n", *pn}, {"poly", f.format()}, {"distinct", distinct}};
        detail::emit(cfg, out, obj,
                     [&](std::ostream& o) { o << "distinct: " << distinct << "\n"; });
        return 0;
      };
    });
  }

  // ---- g ----
  auto* g_cmd = app.add_subcommand("g", "Difference polynomials");
  {
    auto* poly_cmd = g_cmd->add_subcommand("poly", "g(t) = f_hat(T_k+t) - f_hat(T_bar_k+t)");
    auto gp = std::make_shared<std::string>();
    auto gk = std::make_shared<int>(0);
    poly_cmd->add_option("--poly", *gp, "Polynomial, highest degree first")->required();
    poly_cmd->add_option("--k", *gk, "Split level")->required();
    poly_cmd->callback([&, gp, gk] {
      action = [&, gp, gk]() {
        Polynomial f = Polynomial::parse(*gp);
        Polynomial g = g_poly(f, *gk);  // laws asserted inside
        nlohmann::ordered_json obj{
            {"poly", f.format()}, {"k", *gk}, {"g", g.format()}, {"degree", g.degree()}};
        detail::emit(cfg, out, obj, [&](std::ostream& o) {
          o << "g: " << g.format() << "\n";
          o << "degree: " << g.degree() << "\n";
        });
        out << "VERIFIED\n";
        return 0;
      };
    });
  }

  // CLI11 wants argv-style input; args here excludes the program name.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("grahamlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (!action) {
      err << "error: no subcommand selected\n";
      return 2;
    }
    return action();
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const desk_budget_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const verification_error& e) {
    out << "FAILED: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace grahamlab::cli
