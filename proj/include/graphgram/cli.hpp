#pragma once

// Command-line front end. Kept as a library function so tests can drive the
// exact binary behavior in-process. Exit codes: 0 success, 1 verification or
// data failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "graphgram/generators.hpp"
#include "graphgram/induction.hpp"
#include "graphgram/io.hpp"

namespace graphgram::cli {

namespace detail {

struct InputOptions {
  std::string path;
  std::string format = "edgelist";
  std::string strip;       // comma-separated element symbols
  std::string close_loop;  // comma-separated serial:serial pairs
  bool relabel_degree = false;
};

struct InductionOptions {
  std::string strategy = "matching";
  int min_support = 2;
  int max_iter = -1;
  bool no_inline = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_parameters, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::invalid_parameters, "cannot write " + path);
  out << text;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("--input", opt.path, "input graph file")->required();
  cmd->add_option("--format", opt.format, "input format")
      ->check(CLI::IsMember({"edgelist", "pdb"}));
  cmd->add_option("--strip", opt.strip, "elements to drop (pdb), e.g. H or H,O");
  cmd->add_option("--close-loop", opt.close_loop, "extra bonds (pdb), e.g. 3:88,12:90");
  cmd->add_flag("--relabel-degree", opt.relabel_degree, "replace node labels by degree labels");
}

inline void add_induction_options(CLI::App* cmd, InductionOptions& opt) {
  cmd->add_option("--strategy", opt.strategy, "selection strategy")
      ->check(CLI::IsMember({"matching", "greedy"}));
  cmd->add_option("--min-support", opt.min_support, "minimum abstractable occurrences");
  cmd->add_option("--max-iter", opt.max_iter, "iteration cap");
  cmd->add_flag("--no-inline", opt.no_inline, "skip the single-use inlining pass");
}

inline Graph load_input(const InputOptions& opt) {
  const std::string text = read_file(opt.path);
  Graph g;
  if (opt.format == "pdb") {
    std::set<std::string> strip;
    for (const std::string& s : split_on(opt.strip, ',')) strip.insert(s);
    std::vector<std::pair<int, int>> extra;
    for (const std::string& pair : split_on(opt.close_loop, ',')) {
      std::vector<std::string> ends = split_on(pair, ':');
      if (ends.size() != 2) fail(Errc::invalid_parameters, "--close-loop expects a:b pairs");
      extra.emplace_back(std::stoi(ends[0]), std::stoi(ends[1]));
    }
    g = parse_pdb_subset(text, strip, extra);
  } else {
    g = parse_edge_list(text);
  }
  if (opt.relabel_degree) g = relabel_by_degree(g);
  return g;
}

inline InductionConfig make_config(const InductionOptions& opt) {
  InductionConfig cfg;
  cfg.strategy = opt.strategy == "greedy" ? SelectionStrategy::raw_frequency
                                          : SelectionStrategy::matching_count;
  cfg.min_support = opt.min_support;
  if (opt.max_iter >= 0) cfg.max_iterations = opt.max_iter;
  cfg.inline_single_use = !opt.no_inline;
  return cfg;
}

inline void print_score_table(std::ostream& os, const std::vector<TypeScore>& scores,
                              const TypeTable& types, const std::string& indent) {
  std::size_t width = 4;
  for (const TypeScore& row : scores) width = std::max(width, key_to_string(row.key, types).size());
  os << indent << std::left << std::setw(static_cast<int>(width) + 2) << "type"
     << std::setw(7) << "count" << "score\n";
  for (const TypeScore& row : scores)
    os << indent << std::left << std::setw(static_cast<int>(width) + 2)
       << key_to_string(row.key, types) << std::setw(7) << row.count << row.score << "\n";
}

inline std::string summary_line(const GrammarResult& r) {
  std::ostringstream os;
  os << "iterations=" << r.trace.size() << " productions=" << r.grammar.productions.size()
     << " dl " << r.source_dl << " -> " << r.final_dl
     << " max-depth=" << max_hierarchy_depth(r.grammar);
  return os.str();
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphgram: lossless graph compression by graph-grammar induction"};
  app.name("graphgram");
  app.require_subcommand(1);

  detail::InputOptions in_induce, in_verify, in_stats, in_dot;
  detail::InductionOptions ind_induce, ind_verify;
  std::string out_path, dot_path, grammar_path, gen_kind, gen_labels, dot_grammar;
  bool trace = false;

  CLI::App* c_induce = app.add_subcommand("induce", "induce a grammar from a graph");
  detail::add_input_options(c_induce, in_induce);
  detail::add_induction_options(c_induce, ind_induce);
  c_induce->add_option("--out", out_path, "grammar output file (default stdout)");
  c_induce->add_option("--dot", dot_path, "also write the grammar as DOT");
  c_induce->add_flag("--trace", trace, "print per-iteration score tables");

  CLI::App* c_verify = app.add_subcommand("verify", "check a grammar file against its input");
  detail::add_input_options(c_verify, in_verify);
  detail::add_induction_options(c_verify, ind_verify);
  c_verify->add_option("--grammar", grammar_path, "grammar file to verify")->required();

  CLI::App* c_expand = app.add_subcommand("expand", "expand a grammar file back to a graph");
  c_expand->add_option("--grammar", grammar_path, "grammar file")->required();
  c_expand->add_option("--out", out_path, "edge-list output file (default stdout)");

  CLI::App* c_stats = app.add_subcommand("stats", "edge lexicon and scores for one iteration");
  detail::add_input_options(c_stats, in_stats);

  CLI::App* c_dot = app.add_subcommand("dot", "export a graph or grammar as DOT");
  detail::add_input_options(c_dot, in_dot);
  c_dot->get_option("--input")->required(false);
  c_dot->add_option("--grammar", dot_grammar, "grammar file instead of an input graph");
  c_dot->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_gen = app.add_subcommand("gen", "emit a generator graph as an edge list");
  GeneratorSpec spec;
  c_gen->add_option("--kind", gen_kind, "generator kind")
      ->required()
      ->check(CLI::IsMember({"two_triangles", "demo_molecule", "path", "cycle", "rect_grid",
                             "hex_grid", "nested_tree", "star_forest", "nucleotide_chain",
                             "random"}));
  c_gen->add_option("--n", spec.n, "size parameter (path edges, cycle/random nodes, chain units)");
  c_gen->add_option("--rows", spec.rows, "grid rows");
  c_gen->add_option("--cols", spec.cols, "grid cols");
  c_gen->add_option("--hubs", spec.hubs, "star forest hubs");
  c_gen->add_option("--leaves", spec.leaves, "leaves per hub");
  c_gen->add_option("--branching", spec.branching, "tree branching factor");
  c_gen->add_option("--depth", spec.depth, "tree depth");
  c_gen->add_option("--labels", gen_labels, "comma-separated node labels, applied cyclically");
  c_gen->add_option("--p", spec.p, "random edge probability");
  c_gen->add_option("--seed", spec.seed, "random seed");
  c_gen->add_flag("--loop", spec.loop, "close the chain into a loop");
  c_gen->add_flag("--directed", spec.directed, "directed star edges");
  c_gen->add_option("--out", out_path, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_induce->parsed()) {
      Graph g = detail::load_input(in_induce);
      GrammarResult r = induce(std::move(g), detail::make_config(ind_induce));
      const std::string text = serialize_grammar(r.grammar);
      std::ostream& info = out_path.empty() ? err : out;
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      if (!dot_path.empty()) detail::write_file(dot_path, export_dot(r.grammar));
      if (trace) {
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
          const IterationRecord& rec = r.trace[i];
          info << "iter " << i + 1 << ": " << key_to_string(rec.chosen, r.grammar.types())
               << " m=" << rec.matching_size << "\n";
          detail::print_score_table(info, rec.scores, r.grammar.types(), "  ");
        }
      }
      info << detail::summary_line(r) << "\n";
      return 0;
    }
    if (c_verify->parsed()) {
      Graph g = detail::load_input(in_verify);
      GrammarResult r = induce(g, detail::make_config(ind_verify));
      const std::string given = detail::read_file(grammar_path);
      std::string canonical;
      try {
        canonical = serialize_grammar(parse_grammar(given));
      } catch (const Error& e) {
        err << "verify: grammar file unreadable: " << e.what() << "\n";
        return 1;
      }
      if (canonical != serialize_grammar(r.grammar)) {
        err << "verify: grammar does not match the one induced from the input\n";
        return 1;
      }
      if (!graph_equal(expand(r.grammar), g)) {
        err << "verify: expansion does not reproduce the input\n";
        return 1;
      }
      out << "verified: grammar matches input and expands losslessly\n";
      return 0;
    }
    if (c_expand->parsed()) {
      GraphGrammar gr = parse_grammar(detail::read_file(grammar_path));
      const std::string text = serialize_edge_list(expand(gr));
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      return 0;
    }
    if (c_stats->parsed()) {
      Graph g = detail::load_input(in_stats);
      EdgeLexicon lex = build_lexicon(g);
      out << "nodes " << g.live_node_count() << " edges " << g.live_edge_count() << " dl "
          << graph_dl(g) << "\n";
      detail::print_score_table(out, score_edge_types(g, lex, SelectionStrategy::matching_count),
                                g.types(), "");
      return 0;
    }
    if (c_dot->parsed()) {
      std::string text;
      if (!dot_grammar.empty()) {
        text = export_dot(parse_grammar(detail::read_file(dot_grammar)));
      } else if (!in_dot.path.empty()) {
        text = export_dot(detail::load_input(in_dot));
      } else {
        err << "dot: need --input or --grammar\n";
        return 2;
      }
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      return 0;
    }
    if (c_gen->parsed()) {
      spec.kind = *kind_from_name(gen_kind);
      spec.labels = detail::split_on(gen_labels, ',');
      const std::string text = serialize_edge_list(generate(spec));
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::invalid_parameters ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace graphgram::cli
