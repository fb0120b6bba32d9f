// Command-line interface for slide trees, asymmetric multinomials,
// column-restricted parking functions, caterpillar words, and the bijections
// between them.  Exit codes: 0 success, 1 verification failure, 2 parse
// error, 3 semantic input error.
#include <CLI11.hpp>

#include "slidebij/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace slidebij;

namespace {

constexpr const char* kRecordsSchema = "schema=slidebij/1";

// "-" means: read one line from standard input.
std::string resolve_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  std::getline(std::cin, line);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  return line;
}

Composition parse_comp(const std::string& text) {
  Composition k;
  if (text.empty()) return k;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;  // reject below, but consume digits
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number in composition", pos);
    int part = std::stoi(text.substr(start, pos - start));
    if (part < 0) throw ParseError("composition parts must be >= 0", start);
    k.push_back(part);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in composition", pos);
    ++pos;
  }
  long long sum = 0;
  for (int part : k) sum += part;
  if (sum != static_cast<long long>(k.size()))
    throw SemanticError("composition parts must sum to the length");
  return k;
}

int max_n_guard() {
  if (const char* env = std::getenv("SLIDEBIJ_MAX_N")) return std::atoi(env);
  return 7;
}

SlideRule parse_rule(const std::string& rule) {
  if (rule == "omega") return SlideRule::OMEGA;
  if (rule == "psi") return SlideRule::PSI;
  throw SemanticError("rule must be omega or psi");
}

void check_psi_guard(const Composition& k) {
  if (static_cast<int>(k.size()) > max_n_guard())
    throw SemanticError("psi enumeration capped at n=" + std::to_string(max_n_guard()) +
                        " (override with SLIDEBIJ_MAX_N)");
}

int run_count(const std::string& comp_arg, const std::string& method) {
  Composition k = parse_comp(resolve_input(comp_arg));
  CountValue value;
  if (method == "recursion") {
    value = asym_multinomial(k);
  } else if (method == "multinomial") {
    value = multinomial(k);
  } else if (method == "slide-omega") {
    value = slide_set_keys(k, SlideRule::OMEGA).size();
  } else if (method == "slide-psi") {
    check_psi_guard(k);
    value = slide_set_keys(k, SlideRule::PSI).size();
  } else if (method == "cpf") {
    value = enumerate_cpf(k).size();
  } else {
    throw SemanticError("unknown count method: " + method);
  }
  std::cout << value << "\n";
  return 0;
}

void emit_trees(const std::vector<std::string>& keys, const std::string& format) {
  if (format == "dot") {
    for (const auto& key : keys) std::cout << export_dot(parse_tree(key));
    return;
  }
  if (format == "records") std::cout << kRecordsSchema << "\n";
  for (const auto& key : keys)
    std::cout << (format == "records" ? "tree=" : "") << key << "\n";
}

void emit_words(const std::vector<Word>& words, const std::string& format) {
  if (format == "dot") throw SemanticError("dot output applies to tree sets only");
  if (format == "records") std::cout << kRecordsSchema << "\n";
  for (const Word& w : words)
    std::cout << (format == "records" ? "word=" : "") << format_word(w) << "\n";
}

int run_enumerate(const std::string& comp_arg, const std::string& set, const std::string& format,
                  const std::vector<std::string>& avoid) {
  Composition k = parse_comp(resolve_input(comp_arg));
  std::vector<WordPredicate> extra;
  for (const std::string& pattern : avoid) extra.push_back(parse_pattern(pattern));
  auto filter_words = [&](std::vector<Word> words) {
    std::vector<Word> out;
    for (Word& w : words) {
      bool keep = true;
      for (const auto& pred : extra) keep = keep && pred(w);
      if (keep) out.push_back(std::move(w));
    }
    return out;
  };
  if (set == "slide-omega" || set == "slide-psi") {
    if (!extra.empty()) throw SemanticError("--avoid applies to word sets only");
    if (set == "slide-psi") check_psi_guard(k);
    emit_trees(slide_set_keys(k, set == "slide-psi" ? SlideRule::PSI : SlideRule::OMEGA), format);
  } else if (set == "cpf") {
    if (!extra.empty()) throw SemanticError("--avoid applies to word sets only");
    if (format == "dot") throw SemanticError("dot output applies to tree sets only");
    if (format == "records") std::cout << kRecordsSchema << "\n";
    for (const ParkingFunction& p : enumerate_cpf(k))
      std::cout << (format == "records" ? "cpf=" : "") << format_pf(p) << "\n";
  } else if (set == "cat-words-omega" || set == "cat-words-psi") {
    SlideRule rule = set == "cat-words-psi" ? SlideRule::PSI : SlideRule::OMEGA;
    emit_words(filter_words(enumerate_caterpillar_words(k, rule)), format);
  } else if (set == "words") {
    emit_words(enumerate_avoiders(k, extra), format);
  } else {
    throw SemanticError("unknown set: " + set);
  }
  return 0;
}

int run_map(const std::string& from, const std::string& to, const std::string& input_arg,
            const std::string& comp_arg) {
  std::string input = resolve_input(input_arg);
  auto need_comp = [&]() {
    if (comp_arg.empty())
      throw SemanticError("--comp is required to read a word off a bare tree");
    return parse_comp(comp_arg);
  };

  // Normalize the source to a slide word where the maps factor through one.
  Word word;
  if (from == "word" || from == "perm") {
    word = parse_word(input);
    if (from == "perm") {
      if (content(word) != Composition(word.size(), 1))
        throw SemanticError("perm input must be a permutation");
      if (to == "tree") {
        std::cout << serialize_tree(rho(word)) << "\n";
        return 0;
      }
      if (to != "perm") word = word_of(rho(word), Composition(word.size(), 1));
    }
  } else if (from == "cpf") {
    ParkingFunction p = parse_pf(input);
    if (to == "cpf") {
      std::cout << format_pf(p) << "\n";
      return 0;
    }
    if (!is_valid_pf(p) || !is_cpf(p))
      throw SemanticError("input is not a column-restricted parking function");
    word = pf_word(p);
    std::reverse(word.begin(), word.end());
  } else if (from == "tree") {
    Tree t = parse_tree(input);
    if (to == "tree") {
      std::cout << serialize_tree(t) << "\n";
      return 0;
    }
    if (to == "perm") {
      std::cout << format_word(phi(t)) << "\n";
      return 0;
    }
    word = word_of(t, need_comp());
  } else {
    throw SemanticError("unknown --from: " + from);
  }

  if (to == "word" || to == "perm") {
    if (to == "perm") {
      Tree t = tree_of_word(word);
      std::cout << format_word(phi(t)) << "\n";
    } else {
      std::cout << format_word(word) << "\n";
    }
  } else if (to == "tree") {
    std::cout << serialize_tree(tree_of_word(word)) << "\n";
  } else if (to == "cpf") {
    Word rev = word;
    std::reverse(rev.begin(), rev.end());
    ParkingFunction p{rev};
    if (!is_valid_pf(p) || !is_cpf(p))
      throw SemanticError("word does not reverse to a column-restricted parking function");
    std::cout << format_pf(p) << "\n";
  } else {
    throw SemanticError("unknown --to: " + to);
  }
  return 0;
}

int run_label(const std::string& tree_arg, const std::string& comp_arg, const std::string& rule,
              const std::string& format) {
  Tree t = parse_tree(resolve_input(tree_arg));
  Composition k = parse_comp(comp_arg);
  auto res = slide_labeling(t, k, parse_rule(rule));
  if (!res.ok) {
    std::cout << "FAIL step=" << res.fail_step << " " << res.reason << "\n";
    return 1;
  }
  if (format == "dot")
    std::cout << export_dot(res.labeled);
  else
    std::cout << serialize_labeled(res.labeled) << "\n";
  return 0;
}

int run_verify(int max_n, const std::string& suite, const std::string& format) {
  if (max_n > max_n_guard())
    throw SemanticError("--max-n exceeds the configured bound " + std::to_string(max_n_guard()) +
                        " (override with SLIDEBIJ_MAX_N)");
  Report report = verify_suite(suite, max_n);
  if (format == "records") std::cout << kRecordsSchema << "\n";
  for (const Check& c : report) {
    if (format == "records") {
      std::cout << "check=" << c.name << " status=" << (c.pass ? "PASS" : "FAIL");
      if (!c.pass) std::cout << " counterexample=" << c.counterexample;
      std::cout << "\n";
    } else {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) std::cout << "  (" << c.counterexample << ")";
      std::cout << "\n";
    }
  }
  return all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slide trees, asymmetric multinomials, parking functions, and their bijections"};
  app.require_subcommand(1);

  std::string comp, method = "recursion", set = "slide-omega", format = "text";
  std::string from, to, input, rule = "omega", suite = "all", tree;
  std::vector<std::string> avoid;
  int max_n = 5;

  auto* count = app.add_subcommand("count", "count a set attached to a composition");
  count->add_option("comp", comp, "composition, e.g. 1,0,2,1 (or - for stdin)")->required();
  count->add_option("--method", method,
                    "recursion | slide-omega | slide-psi | cpf | multinomial");

  auto* enumerate = app.add_subcommand("enumerate", "list a set attached to a composition");
  enumerate->add_option("comp", comp, "composition (or - for stdin)")->required();
  enumerate->add_option("--set", set,
                        "slide-omega | slide-psi | cpf | cat-words-omega | cat-words-psi | words");
  enumerate->add_option("--format", format, "text | records | dot");
  enumerate->add_option("--avoid", avoid, "pattern(s) the words must avoid, e.g. 23-1, 2-1-2");

  auto* map = app.add_subcommand("map", "convert between representations");
  map->add_option("--from", from, "cpf | word | tree | perm")->required();
  map->add_option("--to", to, "cpf | word | tree | perm")->required();
  map->add_option("--input", input, "source object (or - for stdin)")->required();
  map->add_option("--comp", comp, "composition (required for --from tree --to word/cpf)");

  auto* label = app.add_subcommand("label", "run the slide labeling algorithm on a tree");
  label->add_option("tree", tree, "tree, e.g. (a,b,(c,1)) (or - for stdin)")->required();
  label->add_option("--comp", comp, "composition")->required();
  label->add_option("--rule", rule, "omega | psi");
  label->add_option("--format", format, "text | dot");

  auto* verify = app.add_subcommand("verify", "run the theorem-verification suites");
  verify->add_option("--max-n", max_n, "verify all compositions up to this n");
  verify->add_option("--suite", suite, "counts | bijection | caterpillar | ones | structure | all");
  verify->add_option("--format", format, "text | records");

  try {
    app.parse(argc, argv);
    if (count->parsed()) return run_count(comp, method);
    if (enumerate->parsed()) return run_enumerate(comp, set, format, avoid);
    if (map->parsed()) return run_map(from, to, input, comp);
    if (label->parsed()) return run_label(tree, comp, rule, format);
    if (verify->parsed()) return run_verify(max_n, suite, format);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
