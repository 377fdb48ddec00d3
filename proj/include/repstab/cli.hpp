#pragma once

// Subcommand dispatch for the `repstab` tool. run() writes to the given
// streams and returns the exit status: 0 success, 1 a mathematical
// precondition failed, 2 malformed input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repstab/automaton.hpp"
#include "repstab/cat/colored_injection.hpp"
#include "repstab/cat/matching.hpp"
#include "repstab/cat/serialize.hpp"
#include "repstab/cat/veronese.hpp"
#include "repstab/errors.hpp"
#include "repstab/groebner.hpp"
#include "repstab/hilbert.hpp"
#include "repstab/secant.hpp"
#include "repstab/tca.hpp"
#include "repstab/words.hpp"

namespace repstab::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

inline std::string read_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw parse_error("cannot open '" + arg.substr(1) + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::vector<Word> read_words(const std::string& path, int colors) {
  std::vector<Word> out;
  if (path.empty()) return out;
  for (const auto& line : read_lines(path)) out.push_back(Word::parse(line, colors));
  return out;
}

inline std::vector<ModuleElement> read_elements(const std::string& path, int n, int colors) {
  std::vector<ModuleElement> out;
  for (const auto& line : read_lines(path)) out.push_back(ModuleElement::parse(line, n, colors));
  return out;
}

inline std::string join(const std::vector<Integer>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

inline Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json to_json(const IntPoly& p) { return to_json(p.coefficients()); }

inline Json to_json(const EventualPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients) c.push_back(x.get_str());
  return Json{{"onset", p.onset}, {"coefficients", c}, {"text", p.str()}};
}

inline cat::VeroneseObject parse_object(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw parse_error("V objects are written 'degree,length'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw parse_error("V objects are written 'degree,length'");
  }
}

inline int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected an integer for ") + what);
  }
}

inline unsigned long long default_seed() {
  if (const char* s = std::getenv("REPSTAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational probes for FI_d, OI_d, Veronese and matching categories"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // hom
  auto* hom = app.add_subcommand("hom", "Enumerate a hom-set in canonical order");
  std::string hom_cat = "FI", hom_src, hom_tgt;
  int hom_d = 1, hom_r = 2;
  bool hom_count = false, hom_json = false;
  hom->add_option("--cat", hom_cat, "FI, OI, V, M or OM")->check(CLI::IsMember({"FI", "OI", "V", "M", "OM"}));
  hom->add_option("--d", hom_d, "colors (FI/OI) or block size (M/OM)");
  hom->add_option("--r", hom_r, "number of variables (V)");
  hom->add_option("--src", hom_src, "source: n, or 'degree,length' for V")->required();
  hom->add_option("--tgt", hom_tgt, "target: m, or 'degree,length' for V")->required();
  hom->add_flag("--count", hom_count, "print only the number of morphisms");
  hom->add_flag("--json", hom_json);

  // compose
  auto* comp = app.add_subcommand("compose", "Compose two morphisms: second ∘ first");
  std::string comp_first, comp_second;
  comp->add_option("--first", comp_first, "JSON morphism or @file")->required();
  comp->add_option("--second", comp_second, "JSON morphism or @file")->required();

  // encode
  auto* enc = app.add_subcommand("encode", "Word of an OI_d morphism, or decode a word");
  std::string enc_morphism, enc_word;
  int enc_n = 0, enc_d = 0;
  enc->add_option("--morphism", enc_morphism, "JSON OI morphism or @file");
  enc->add_option("--decode", enc_word, "word to decode");
  enc->add_option("--n", enc_n, "source size for --decode");
  enc->add_option("--d", enc_d, "colors for --decode (default: inferred)");

  // member
  auto* mem = app.add_subcommand("member", "Membership in a monomial submodule of P'_n");
  int mem_n = 1, mem_d = 1;
  std::string mem_gens, mem_word;
  bool mem_minimal = false, mem_json = false;
  mem->add_option("--n", mem_n);
  mem->add_option("--d", mem_d);
  mem->add_option("--gens", mem_gens, "file with one generator word per line")->required();
  mem->add_option("--word", mem_word, "word to test");
  mem->add_flag("--minimal", mem_minimal, "print the minimal generators");
  mem->add_flag("--json", mem_json);

  // reduce
  auto* red = app.add_subcommand("reduce", "Divide a module element by generators");
  int red_n = 1, red_d = 1;
  std::string red_gens, red_element;
  bool red_json = false;
  red->add_option("--n", red_n);
  red->add_option("--d", red_d);
  red->add_option("--gens", red_gens, "file with one module element per line")->required();
  red->add_option("--element", red_element, "element such as '1*11* - 1**11'")->required();
  red->add_flag("--json", red_json);

  // initial
  auto* ini = app.add_subcommand("initial", "Truncated initial module of a submodule of P'_n");
  int ini_n = 1, ini_d = 1, ini_max = 4;
  std::string ini_gens;
  bool ini_json = false;
  ini->add_option("--n", ini_n);
  ini->add_option("--d", ini_d);
  ini->add_option("--gens", ini_gens, "file with one module element per line")->required();
  ini->add_option("--max", ini_max, "truncation degree D");
  ini->add_flag("--json", ini_json);

  // hilbert / gf
  auto* hil = app.add_subcommand("hilbert", "Hilbert function of P'_n modulo a monomial submodule");
  auto* gf = app.add_subcommand("gf", "Generating function of P'_n modulo a monomial submodule");
  int hil_n = 1, hil_d = 1, hil_max = 12, hil_window = 0;
  std::string hil_gens;
  bool hil_json = false;
  for (auto* sc : {hil, gf}) {
    sc->add_option("--n", hil_n);
    sc->add_option("--d", hil_d);
    sc->add_option("--gens", hil_gens, "file with one generator word per line");
    sc->add_flag("--json", hil_json);
  }
  hil->add_option("--max", hil_max, "largest length counted");
  hil->add_option("--window", hil_window, "verification window for the polynomial fit (0: automatic)");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit an eventual polynomial to a count sequence");
  std::string fit_counts;
  int fit_window = 4;
  bool fit_json = false;
  fit->add_option("--counts", fit_counts, "comma-separated integers")->required();
  fit->add_option("--window", fit_window);
  fit->add_flag("--json", fit_json);

  // secant
  auto* sec = app.add_subcommand("secant", "Secant ideals of Veronese embeddings, truncated");
  int sec_r = 2, sec_d = 2, sec_order = 1, sec_max = 4;
  bool sec_basis = false;
  sec->add_option("--r", sec_r, "variables of B = k[x_1..x_r]");
  sec->add_option("--d", sec_d, "Veronese degree");
  sec->add_option("--order", sec_order, "secant order");
  sec->add_option("--maxdeg", sec_max, "truncation degree D");
  sec->add_flag("--basis", sec_basis, "include per-degree bases");

  // tca
  auto* tca_cmd = app.add_subcommand("tca", "Check tca axioms for the free tca on k^d");
  std::string tca_action_name;
  int tca_d = 2, tca_deg = 2, tca_tgt = 4;
  tca_cmd->add_option("action", tca_action_name, "check")->required()->check(CLI::IsMember({"check"}));
  tca_cmd->add_option("--d", tca_d);
  tca_cmd->add_option("--max-degree", tca_deg, "largest n, m for the commutativity and equivariance checks");
  tca_cmd->add_option("--max-target", tca_tgt, "largest target for the functoriality check");

  // higman
  auto* hig = app.add_subcommand("higman", "Search a word stream for a Higman witness");
  std::string hig_words;
  bool hig_random = false;
  unsigned long long hig_seed = detail::default_seed();
  int hig_alphabet = 3, hig_maxlen = 12;
  std::size_t hig_budget = 10000;
  hig->add_option("--words", hig_words, "file with one word per line");
  hig->add_flag("--random", hig_random, "pseudorandom stream");
  hig->add_option("--seed", hig_seed);
  hig->add_option("--alphabet", hig_alphabet, "alphabet size including *");
  hig->add_option("--maxlen", hig_maxlen);
  hig->add_option("--budget", hig_budget);

  // antichain-search
  auto* anti = app.add_subcommand("antichain-search", "Greedy antichain probe in the ordered matching category");
  int anti_d = 2, anti_n = 0, anti_min = 0, anti_max = 6;
  anti->add_option("--d", anti_d, "block size");
  anti->add_option("--n", anti_n, "source size");
  anti->add_option("--min-tgt", anti_min);
  anti->add_option("--max-tgt", anti_max);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*hom) {
      cat::Json list = cat::Json::array();
      std::size_t count = 0;
      auto emit = [&](const auto& homs) {
        count = homs.size();
        if (!hom_count)
          for (const auto& h : homs) list.push_back(cat::to_json(h));
      };
      if (hom_cat == "V") {
        emit(cat::enumerate_hom(hom_r, detail::parse_object(hom_src), detail::parse_object(hom_tgt)));
      } else {
        int n = detail::parse_int(hom_src, "--src"), m = detail::parse_int(hom_tgt, "--tgt");
        if (hom_cat == "FI") emit(cat::enumerate_hom<cat::Unordered>(hom_d, n, m));
        else if (hom_cat == "OI") emit(cat::enumerate_hom<cat::OrderPreserving>(hom_d, n, m));
        else if (hom_cat == "M") emit(cat::enumerate_matching_hom<cat::Unordered>(hom_d, n, m));
        else emit(cat::enumerate_matching_hom<cat::OrderPreserving>(hom_d, n, m));
      }
      if (hom_json) {
        Json doc{{"count", count}};
        if (!hom_count) doc["morphisms"] = list;
        out << doc.dump(2) << "\n";
      } else if (hom_count) {
        out << count << "\n";
      } else {
        for (const auto& m : list) out << m.dump() << "\n";
      }
      return 0;
    }
    if (*comp) {
      auto first = cat::parse_morphism(detail::read_text(comp_first));
      auto second = cat::parse_morphism(detail::read_text(comp_second));
      out << cat::to_json(cat::compose_any(second, first)).dump() << "\n";
      return 0;
    }
    if (*enc) {
      if (!enc_word.empty() || (enc_morphism.empty() && enc->count("--decode"))) {
        Word w = Word::parse(enc_word, enc_d);
        out << cat::to_json(decode_word(w, enc_n)).dump() << "\n";
        return 0;
      }
      if (enc_morphism.empty()) throw parse_error("encode: give --morphism or --decode");
      auto m = cat::parse_morphism(detail::read_text(enc_morphism));
      if (!std::holds_alternative<cat::OIdMorphism>(m)) throw domain_error("encode: only OI morphisms have words");
      out << encode_word(std::get<cat::OIdMorphism>(m)).str() << "\n";
      return 0;
    }
    if (*mem) {
      auto sub = MonomialSubmodule::from_words(mem_n, mem_d, detail::read_words(mem_gens, mem_d));
      if (mem_minimal) {
        auto minimal = minimal_generators(sub);
        if (mem_json) {
          Json a = Json::array();
          for (const auto& w : minimal.generator_words()) a.push_back(w.str());
          out << Json{{"minimal_generators", a}}.dump(2) << "\n";
        } else {
          for (const auto& w : minimal.generator_words()) out << w.str() << "\n";
        }
        if (mem_word.empty()) return 0;
      }
      if (mem_word.empty()) throw parse_error("member: give --word or --minimal");
      auto phi = decode_word(Word::parse(mem_word, mem_d), mem_n);
      auto cert = member(sub, phi);
      if (mem_json) {
        Json doc{{"word", encode_word(phi).str()}, {"member", cert.has_value()}};
        if (cert) {
          doc["generator"] = encode_word(sub.generators()[cert->generator]).str();
          doc["quotient"] = cat::to_json(cert->quotient);
        }
        out << doc.dump(2) << "\n";
      } else if (cert) {
        out << "true\ngenerator: " << encode_word(sub.generators()[cert->generator]).str()
            << "\nquotient: " << cat::to_json(cert->quotient).dump() << "\n";
      } else {
        out << "false\n";
      }
      return 0;
    }
    if (*red) {
      auto gens = detail::read_elements(red_gens, red_n, red_d);
      auto v = ModuleElement::parse(red_element, red_n, red_d);
      auto res = reduce(v, gens);
      if (red_json) {
        Json steps = Json::array();
        for (const auto& s : res.steps)
          steps.push_back(Json{{"generator", s.generator + 1},
                               {"quotient", cat::to_json(s.quotient)},
                               {"coefficient", s.coefficient.get_str()}});
        out << Json{{"remainder", res.remainder.str()}, {"steps", steps}}.dump(2) << "\n";
      } else {
        out << "remainder: " << res.remainder.str() << "\n";
        for (const auto& s : res.steps)
          out << "step: " << s.coefficient.get_str() << " * g" << (s.generator + 1) << " via "
              << cat::to_json(s.quotient).dump() << "\n";
      }
      return 0;
    }
    if (*ini) {
      auto gens = detail::read_elements(ini_gens, ini_n, ini_d);
      auto pieces = initial_module_truncated(gens, ini_n, ini_d, ini_max);
      Json doc = Json::object();
      for (int m = ini_n; m <= ini_max; ++m) {
        Json a = Json::array();
        std::vector<Word> desc(pieces[m].rbegin(), pieces[m].rend());
        for (const auto& w : desc) a.push_back(w.str());
        if (ini_json) {
          doc[std::to_string(m)] = a;
        } else {
          out << "degree " << m << " (" << desc.size() << "):";
          for (const auto& w : desc) out << " " << w.str();
          out << "\n";
        }
      }
      if (ini_json) out << Json{{"truncation", ini_max}, {"lead_terms", doc}}.dump(2) << "\n";
      return 0;
    }
    if (*hil || *gf) {
      auto sub = MonomialSubmodule::from_words(hil_n, hil_d, detail::read_words(hil_gens, hil_d));
      if (*gf) {
        auto built = standard_word_automaton(sub);
        RationalGF g = generating_function(built.dfa);
        if (hil_json)
          out << Json{{"gf", g.str()}, {"numerator", detail::to_json(g.numerator())},
                      {"denominator", detail::to_json(g.denominator())}}.dump(2) << "\n";
        else
          out << g.str() << "\n";
        return 0;
      }
      auto rep = hilbert_function(sub, hil_max, static_cast<std::size_t>(hil_window));
      if (hil_json) {
        Json doc{{"n", hil_n},
                 {"d", hil_d},
                 {"max", hil_max},
                 {"counts", detail::to_json(rep.counts)},
                 {"gf", rep.gf.str()},
                 {"numerator", detail::to_json(rep.gf.numerator())},
                 {"denominator", detail::to_json(rep.gf.denominator())}};
        if (rep.polynomial) doc["polynomial"] = detail::to_json(*rep.polynomial);
        else doc["polynomial"] = "not eventually polynomial within budget";
        if (sub.generators().empty()) doc["fi_counts"] = detail::to_json(fi_projective_counts(rep.counts, hil_n));
        doc["automaton_states"] = rep.automaton_states;
        doc["product_states"] = rep.product_states;
        out << doc.dump(2) << "\n";
      } else {
        out << "counts: " << detail::join(rep.counts, " ") << "\n";
        out << "gf: " << rep.gf.str() << "\n";
        out << "numerator: [" << detail::join(rep.gf.numerator().coefficients(), ", ") << "]\n";
        out << "denominator: [" << detail::join(rep.gf.denominator().coefficients(), ", ") << "]\n";
        if (rep.polynomial)
          out << "polynomial: " << rep.polynomial->str() << " for m >= " << rep.polynomial->onset << "\n";
        else
          out << "polynomial: not eventually polynomial within budget\n";
        if (sub.generators().empty())
          out << "fi counts: " << detail::join(fi_projective_counts(rep.counts, hil_n), " ") << "\n";
        out << "automaton states: " << rep.automaton_states << " (product " << rep.product_states << ")\n";
      }
      return 0;
    }
    if (*fit) {
      std::vector<Integer> counts;
      std::stringstream ss(fit_counts);
      std::string item;
      while (std::getline(ss, item, ',')) {
        Integer z;
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty() || z.set_str(item, 10) != 0) throw parse_error("fit: malformed count '" + item + "'");
        counts.push_back(z);
      }
      auto p = fit_eventual_polynomial(counts, static_cast<std::size_t>(fit_window));
      if (fit_json) out << detail::to_json(p).dump(2) << "\n";
      else out << p.str() << " for m >= " << p.onset << "\n";
      return 0;
    }
    if (*sec) {
      auto I = veronese_ideal_truncated(sec_r, sec_d, sec_max);
      auto S = secant_truncated(I, sec_order, sec_max);
      auto table = generator_degrees(S);
      Json dims = Json::array(), fresh = Json::array();
      for (int e = 0; e <= sec_max; ++e) {
        dims.push_back(S.dim(e));
        fresh.push_back(table.new_generators[e]);
      }
      Json doc{{"r", sec_r}, {"d", sec_d}, {"order", sec_order}, {"truncation", sec_max},
               {"variables", S.names()}, {"dimensions", dims}, {"new_generators", fresh}};
      if (table.max_generator_degree) doc["observed_generation_degree"] = *table.max_generator_degree;
      else doc["observed_generation_degree"] = nullptr;
      doc["note"] = "exact for degrees <= " + std::to_string(sec_max) + "; no claim above";
      if (sec_basis) {
        Json b = Json::object();
        for (int e = 0; e <= sec_max; ++e) {
          Json a = Json::array();
          for (const auto& p : S.basis(e)) a.push_back(p.to_string(S.names()));
          b[std::to_string(e)] = a;
        }
        doc["basis"] = b;
      }
      out << doc.dump(2) << "\n";
      return 0;
    }
    if (*tca_cmd) {
      bool all_ok = true;
      std::size_t checks = 0, failures = 0;
      for (int n = 0; n <= tca_deg; ++n)
        for (int m = 0; m <= tca_deg; ++m)
          for (const auto& x : tca::all_basis_elements(n, tca_d))
            for (const auto& y : tca::all_basis_elements(m, tca_d)) {
              ++checks;
              if (!tca::check_twisted_commutativity(x, y)) ++failures;
            }
      out << "twisted commutativity: " << (failures ? "FAIL" : "pass") << " (" << checks << " pairs)\n";
      all_ok = all_ok && failures == 0;
      std::size_t probes = 0;
      failures = 0;
      for (int n = 0; n <= tca_deg; ++n)
        for (int m = 0; m <= tca_deg; ++m) {
          ++probes;
          if (!tca::equivariance_probe(n, m, tca_d)) ++failures;
        }
      out << "equivariance: " << (failures ? "FAIL" : "pass") << " (" << probes << " probes)\n";
      all_ok = all_ok && failures == 0;
      checks = failures = 0;
      for (int k = 0; k <= tca_tgt; ++k)
        for (int a = k; a <= tca_tgt; ++a)
          for (int b = a; b <= tca_tgt; ++b)
            for (int c = b; c <= tca_tgt; ++c) {
              auto phis = cat::enumerate_hom<cat::Unordered>(tca_d, k, a);
              auto alphas = cat::enumerate_hom<cat::Unordered>(tca_d, a, b);
              auto betas = cat::enumerate_hom<cat::Unordered>(tca_d, b, c);
              for (const auto& phi : phis) {
                auto v = tca::ProjectiveElement::basis(phi);
                for (const auto& al : alphas) {
                  auto av = tca::act(al, v);
                  for (const auto& be : betas) {
                    ++checks;
                    if (tca::act(cat::compose(be, al), v) != tca::act(be, av)) ++failures;
                  }
                }
              }
            }
      out << "functoriality: " << (failures ? "FAIL" : "pass") << " (" << checks << " composites)\n";
      all_ok = all_ok && failures == 0;
      return all_ok ? 0 : 1;
    }
    if (*hig) {
      HigmanReport rep;
      std::vector<Word> seen;
      if (hig_random) {
        if (hig_alphabet < 2 || hig_alphabet > 10) throw parse_error("higman: alphabet size must be 2..10");
        std::mt19937_64 rng(hig_seed);
        const int colors = hig_alphabet - 1;
        rep = higman_witness([&]() -> std::optional<Word> {
          std::vector<std::uint8_t> letters(static_cast<std::size_t>(rng() % (hig_maxlen + 1)));
          for (auto& c : letters) c = static_cast<std::uint8_t>(rng() % hig_alphabet);
          seen.emplace_back(colors, std::move(letters));
          return seen.back();
        }, hig_budget);
      } else {
        if (hig_words.empty()) throw parse_error("higman: give --words or --random");
        auto words = detail::read_words(hig_words, 0);
        int colors = 1;
        for (const auto& w : words) colors = std::max(colors, w.colors());
        for (auto& w : words) w = Word(colors, w.letters());
        std::size_t k = 0;
        rep = higman_witness([&]() -> std::optional<Word> {
          if (k == words.size()) return std::nullopt;
          return words[k++];
        }, hig_budget);
        seen = words;
      }
      if (rep.witness) {
        auto shown = [&](std::size_t idx) {
          const std::string t = seen[idx - 1].str();
          return t.empty() ? std::string("(empty)") : t;
        };
        out << "witness: " << rep.witness->low << " " << rep.witness->high << "\n";
        out << "words: " << shown(rep.witness->low) << " " << shown(rep.witness->high) << "\nembedding:";
        for (int p : rep.witness->embedding) out << " " << p;
        out << "\n";
      } else {
        out << "antichain so far (" << rep.scanned << " words)\n";
      }
      return 0;
    }
    if (*anti) {
      auto rep = tca::antichain_search(anti_d, anti_n, anti_min, anti_max);
      out << "candidates: " << rep.candidates << "\nantichain size: " << rep.antichain.size() << "\n";
      for (const auto& m : rep.antichain) out << cat::to_json(m).dump() << "\n";
      return 0;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace repstab::cli
