#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "pnfkit/combinatorics.hpp"
#include "pnfkit/io.hpp"
#include "pnfkit/jumbled_index.hpp"
#include "pnfkit/lyndon.hpp"
#include "pnfkit/normality.hpp"
#include "pnfkit/pnf.hpp"

namespace pnfkit::cli {
namespace {

using json = nlohmann::ordered_json;

/// Bad invocation detected after CLI11 parsing: unreadable file, conflicting sources.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output of one command. CSV and JSON render the same rows; notes are
/// extra scalars shown in text and JSON only.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  std::vector<std::pair<std::string, json>> notes;
  /// Text override; the default picks a layout from the table shape.
  std::function<void(std::ostream&)> text;
  /// Single-row text as "column=value" lines even for one column.
  bool labelled = false;
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  json doc = json::object();
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  for (const auto& [key, value] : t.notes) doc[key] = value;
  out << doc.dump(2) << '\n';
}

void write_text(std::ostream& out, const Table& t) {
  if (t.text) {
    t.text(out);
  } else if (t.rows.size() == 1 && (t.columns.size() > 1 || t.labelled)) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << t.columns[c] << '=' << cell(t.rows[0][c]) << '\n';
  } else if (t.columns.size() == 1) {
    for (const auto& row : t.rows) out << cell(row[0]) << '\n';
  } else {
    write_csv(out, t);
  }
  for (const auto& [key, value] : t.notes) out << key << '=' << (value.is_null() ? "none" : cell(value)) << '\n';
}

// --- Inputs --------------------------------------------------------------------

struct WordSource {
  std::string argument;
  std::string file;
};

BinaryWord read_word_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_word(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_word(file);
}

BinaryWord resolve_word(const WordSource& src, std::istream& in) {
  const bool has_arg = !src.argument.empty();
  const bool has_file = !src.file.empty();
  if (has_arg == has_file) throw UsageError("give exactly one of a word argument or --input");
  if (has_file) return read_word_file(src.file, in);
  if (src.argument == "-") return read_word(in);
  if (src.argument.size() > kArgumentWordLimit) {
    throw UsageError("word arguments are limited to " + std::to_string(kArgumentWordLimit) +
                     " symbols; use --input or stdin");
  }
  return parse_word(src.argument);
}

void add_word_input(CLI::App* cmd, WordSource& src) {
  cmd->add_option("word", src.argument, "Binary word, or - for stdin");
  cmd->add_option("--input", src.file, "Read the word from the first line of a file (- for stdin)");
}

Bit parse_bit(const std::string& s) { return s == "0" ? Bit::zero : Bit::one; }

unsigned thread_count() {
  const char* env = std::getenv("PNFKIT_THREADS");
  if (env != nullptr && *env != '\0') {
    unsigned value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
      throw UsageError("PNFKIT_THREADS must be a positive integer");
    }
    return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

JumbledIndex load_index(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return JumbledIndex::read(file);
}

std::size_t parse_count(const std::string& field, std::size_t line) {
  std::size_t value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + field + "'", line);
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Profile step heights: +1 per 1, -1 per 0.
std::vector<long> heights(const BinaryWord& w) {
  std::vector<long> h{0};
  for (std::size_t i = 1; i <= w.size(); ++i) h.push_back(h.back() + (w[i] == Bit::one ? 1 : -1));
  return h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix normal words, jumbled pattern matching index and combinatorics lab", "pnfkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool unsafe_large = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--unsafe-large", unsafe_large, "Lift desk-scale guards");

  std::optional<Table> result;
  std::function<Table()> action;
  int status = ok;
  const auto guard = [&] { return unsafe_large ? Guard::bypass : Guard::enforce; };
  const auto enum_options = [&] {
    EnumOptions o;
    o.threads = thread_count();
    o.guard = guard();
    return o;
  };

  // pnf
  WordSource pnf_src;
  std::string pnf_bit = "1";
  auto* pnf_cmd = app.add_subcommand("pnf", "Prefix normal form(s) of a word");
  add_word_input(pnf_cmd, pnf_src);
  pnf_cmd->add_option("--bit", pnf_bit, "Symbol to normalize for")->check(CLI::IsMember({"0", "1", "both"}));
  pnf_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word(pnf_src, in);
      Table t;
      t.labelled = true;
      std::vector<json> row;
      if (pnf_bit != "0") {
        t.columns.push_back("PNF1");
        row.push_back(pnf1(w, guard()).to_string());
      }
      if (pnf_bit != "1") {
        t.columns.push_back("PNF0");
        row.push_back(pnf0(w, guard()).to_string());
      }
      t.rows.push_back(std::move(row));
      return t;
    };
  });

  // check
  WordSource check_src;
  std::string check_bit = "1";
  std::string check_method = "def";
  auto* check_cmd = app.add_subcommand("check", "Decide prefix normality");
  add_word_input(check_cmd, check_src);
  check_cmd->add_option("--bit", check_bit)->check(CLI::IsMember({"0", "1"}));
  check_cmd->add_option("--method", check_method, "def|subadd|pos|superadd|gaps|all")
      ->check(CLI::IsMember({"def", "subadd", "pos", "superadd", "gaps", "all"}));
  check_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word(check_src, in);
      const Bit b = parse_bit(check_bit);
      Table t;
      t.columns = {"method", "verdict"};
      std::vector<NormalityMethod> methods;
      if (check_method == "all") {
        methods.assign(kAllNormalityMethods.begin(), kAllNormalityMethods.end());
      } else {
        methods.push_back(*parse_method(check_method));
      }
      std::optional<bool> first;
      for (NormalityMethod m : methods) {
        const bool verdict = decide_prefix_normal(w, b, m);
        if (first && *first != verdict) status = domain_violation;
        first = first.value_or(verdict);
        t.rows.push_back({std::string(method_name(m)), verdict ? "normal" : "not normal"});
      }
      if (methods.size() == 1) {
        t.text = [verdict = t.rows[0][1]](std::ostream& o) { o << cell(verdict) << '\n'; };
      } else {
        t.text = [rows = t.rows](std::ostream& o) {
          for (const auto& r : rows) o << cell(r[0]) << ": " << cell(r[1]) << '\n';
        };
      }
      if (status != ok) t.notes.emplace_back("disagreement", true);
      return t;
    };
  });

  // index
  auto* index_cmd = app.add_subcommand("index", "Jumbled pattern matching index");
  index_cmd->require_subcommand(1);
  std::string build_input;
  std::string build_output;
  auto* build_cmd = index_cmd->add_subcommand("build", "Build an index file from a word file");
  build_cmd->add_option("wordfile", build_input, "File holding the word (- for stdin)")->required();
  build_cmd->add_option("-o,--output", build_output, "Index file to write")->required();
  build_cmd->callback([&] {
    action = [&] {
      const JumbledIndex ix = build_index(read_word_file(build_input, in), guard());
      std::ofstream file(build_output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + build_output + "'");
      ix.write(file);
      file.close();
      if (!file) throw UsageError("failed writing '" + build_output + "'");
      Table t;
      t.columns = {"length", "bytes"};
      t.rows.push_back({ix.length(), ix.serialize().size()});
      return t;
    };
  });

  std::string query_file;
  std::size_t query_ones = 0;
  std::size_t query_zeros = 0;
  auto* query_cmd = index_cmd->add_subcommand("query", "Is there a factor with this Parikh vector?");
  query_cmd->add_option("ixfile", query_file)->required();
  query_cmd->add_option("--ones", query_ones)->required();
  query_cmd->add_option("--zeros", query_zeros)->required();
  query_cmd->callback([&] {
    action = [&] {
      const JumbledIndex ix = load_index(query_file);
      Table t;
      t.columns = {"ones", "zeros", "answer"};
      t.rows.push_back({query_ones, query_zeros, ix.query(query_ones, query_zeros) ? "yes" : "no"});
      t.text = [answer = t.rows[0][2]](std::ostream& o) { o << cell(answer) << '\n'; };
      return t;
    };
  });

  std::string batch_index;
  std::string batch_csv;
  auto* batch_cmd = index_cmd->add_subcommand("query-batch", "Answer one query per CSV row ones,zeros");
  batch_cmd->add_option("ixfile", batch_index)->required();
  batch_cmd->add_option("csvfile", batch_csv, "Rows 'ones,zeros' (- for stdin); a header row is skipped")
      ->required();
  batch_cmd->callback([&] {
    action = [&] {
      const JumbledIndex ix = load_index(batch_index);
      std::ifstream file;
      std::istream* src = &in;
      if (batch_csv != "-") {
        file.open(batch_csv);
        if (!file) throw UsageError("cannot open '" + batch_csv + "'");
        src = &file;
      }
      Table t;
      t.columns = {"ones", "zeros", "answer"};
      std::string line;
      std::size_t number = 0;
      while (std::getline(*src, line)) {
        ++number;
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
          throw ParseError("line " + std::to_string(number) + ": expected 'ones,zeros'", number);
        }
        const std::string a = trim(line.substr(0, comma));
        const std::string b = trim(line.substr(comma + 1));
        if (number == 1 && !a.empty() && !std::isdigit(static_cast<unsigned char>(a[0]))) continue;
        const std::size_t ones = parse_count(a, number);
        const std::size_t zeros = parse_count(b, number);
        t.rows.push_back({ones, zeros, ix.query(ones, zeros) ? "yes" : "no"});
      }
      t.text = [rows = t.rows](std::ostream& o) {
        for (const auto& r : rows) o << cell(r[2]) << '\n';
      };
      return t;
    };
  });

  // enum
  std::optional<std::size_t> enum_n;
  std::string enum_bit = "1";
  bool count_only = false;
  std::optional<std::size_t> enum_density;
  bool with_ecrit = false;
  bool with_classes = false;
  bool list_classes = false;
  std::optional<std::size_t> ratios;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate and count prefix normal words");
  enum_cmd->add_option("n", enum_n, "Word length");
  enum_cmd->add_option("--bit", enum_bit)->check(CLI::IsMember({"0", "1"}));
  enum_cmd->add_flag("--count-only", count_only, "Print only the count");
  enum_cmd->add_option("--density", enum_density, "Restrict to words with this many 1s");
  enum_cmd->add_flag("--ecrit", with_ecrit, "Report pnw and extension-critical counts");
  enum_cmd->add_flag("--classes", with_classes, "Report prefix-equivalence class statistics");
  enum_cmd->add_flag("--list-classes", list_classes, "List every class (n <= 8)");
  enum_cmd->add_option("--ratios", ratios, "Growth and critical-fraction series for n = 1..N");
  enum_cmd->callback([&] {
    action = [&] {
      Table t;
      const EnumOptions options = enum_options();
      if (ratios) {
        t.columns = {"n", "pnw", "ecrit", "growth", "critical_fraction", "scaled_fraction"};
        for (const RatioRow& r : ratio_series(*ratios, options)) {
          t.rows.push_back({r.n, r.pnw, r.ecrit, r.growth, r.critical_fraction,
                            r.scaled_fraction ? json(*r.scaled_fraction) : json(nullptr)});
        }
        return t;
      }
      if (!enum_n) throw UsageError("enum needs a length n (or --ratios N)");
      const std::size_t n = *enum_n;
      const Bit b = parse_bit(enum_bit);
      if (enum_density && *enum_density > n) {
        throw RangeError("density " + std::to_string(*enum_density) + " exceeds length " + std::to_string(n));
      }
      if (list_classes) {
        if (n > kClassListingLengthLimit) {
          throw ScaleError("class listing is limited to n <= " + std::to_string(kClassListingLengthLimit));
        }
        const ClassStatistics stats = class_statistics(n, true, guard());
        t.columns = {"normal_form", "size", "members"};
        for (const auto& cls : stats.classes) {
          std::string members;
          for (const auto& m : cls.members) members += (members.empty() ? "" : " ") + m.to_string();
          t.rows.push_back({cls.normal_form.to_string(), cls.members.size(), members});
        }
        t.notes.emplace_back("class_count", stats.class_count);
        t.notes.emplace_back("max_class_size", stats.max_class_size);
        return t;
      }
      if (with_ecrit || with_classes) {
        const EnumReport r = enum_report(n, with_classes, options);
        t.columns = {"n", "pnw", "ecrit"};
        t.rows.push_back({r.n, r.pnw, r.ecrit});
        if (with_classes) {
          t.columns.insert(t.columns.end(), {"class_count", "max_class_size"});
          t.rows[0].insert(t.rows[0].end(), {*r.class_count, *r.max_class_size});
        }
        return t;
      }
      // The 0 case is the complement image, so densities count zeros there.
      const auto density_of = [b](const BinaryWord& w) { return w.count(b); };
      if (count_only) {
        t.columns = {"count"};
        const std::uint64_t count =
            enum_density ? count_pnw_density(n, *enum_density, options) : count_pnw(n, options);
        t.rows.push_back({count});
        return t;
      }
      t.columns = {"word"};
      for_each_prefix_normal(
          n, b,
          [&](const BinaryWord& w) {
            if (!enum_density || density_of(w) == *enum_density) t.rows.push_back({w.to_string()});
          },
          guard());
      return t;
    };
  });

  // region
  WordSource region_src;
  auto* region_cmd = app.add_subcommand("region", "Step paths of a word and its two normal forms");
  add_word_input(region_cmd, region_src);
  region_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word(region_src, in);
      const PnfPair p = pnf_pair(w, guard());
      const auto hw = heights(w);
      const auto h1 = heights(p.pnf1);
      const auto h0 = heights(p.pnf0);
      Table t;
      t.columns = {"k", "w", "pnf1", "pnf0"};
      for (std::size_t k = 0; k < hw.size(); ++k) t.rows.push_back({k, hw[k], h1[k], h0[k]});
      return t;
    };
  });

  // gf
  std::size_t gf_d = 0;
  std::size_t gf_n = 0;
  auto* gf_cmd = app.add_subcommand("gf", "Coefficients of the density generating function");
  gf_cmd->add_option("d", gf_d, "Density 0..6")->required();
  gf_cmd->add_option("N", gf_n, "Highest power")->required();
  gf_cmd->callback([&] {
    action = [&] {
      const auto coefficients = expand_gf(gf_d, gf_n);
      Table t;
      t.columns = {"n", "coefficient"};
      for (std::size_t n = 0; n < coefficients.size(); ++n) t.rows.push_back({n, coefficients[n]});
      return t;
    };
  });

  // ext
  std::string ext_word;
  std::size_t ext_m = 0;
  std::optional<std::size_t> ext_d;
  auto* ext_cmd = app.add_subcommand("ext", "Count extensions keeping the word prefix normal");
  ext_cmd->add_option("w", ext_word, "Prefix normal word")->required();
  ext_cmd->add_option("m", ext_m, "Extension length")->required();
  ext_cmd->add_option("d", ext_d, "Total density of the extended word");
  ext_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word({.argument = ext_word, .file = {}}, in);
      Table t;
      t.columns = {"w", "m", "d", "count"};
      t.rows.push_back({w.to_string(), ext_m, ext_d ? json(*ext_d) : json(nullptr), ext_count(w, ext_m, ext_d, guard())});
      t.text = [count = t.rows[0][3]](std::ostream& o) { o << cell(count) << '\n'; };
      return t;
    };
  });

  // bounds
  std::size_t bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Compare pnw(n) with the growth bounds");
  bounds_cmd->add_option("N", bounds_n, "Largest length")->required();
  bounds_cmd->callback([&] {
    action = [&] {
      const BoundReport report = bound_check(bounds_n, enum_options());
      Table t;
      t.columns = {"n", "pnw", "upper", "lower", "upper_holds", "lower_holds"};
      for (const BoundRow& r : report.rows) {
        t.rows.push_back({r.n, r.pnw, r.upper, r.lower, r.upper_holds, r.lower_holds});
      }
      t.notes.emplace_back("upper_threshold", report.upper_threshold ? json(*report.upper_threshold) : json(nullptr));
      return t;
    };
  });

  // profile
  WordSource profile_src;
  std::string profile_kind = "max1";
  auto* profile_cmd = app.add_subcommand("profile", "Maximum/minimum ones or zeros per factor length");
  add_word_input(profile_cmd, profile_src);
  profile_cmd->add_option("--kind", profile_kind, "max1|max0|min1")->check(CLI::IsMember({"max1", "max0", "min1"}));
  profile_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word(profile_src, in);
      const OnesProfile p = profile_kind == "max1"   ? max_ones_profile(w, guard())
                            : profile_kind == "max0" ? max_zeros_profile(w, guard())
                                                     : min_ones_profile(w, guard());
      Table t;
      t.columns = {"k", "value"};
      for (std::size_t k = 0; k <= p.length(); ++k) t.rows.push_back({k, p[k]});
      t.text = [p](std::ostream& o) { write_profile_csv(o, p); };
      return t;
    };
  });

  // parikh
  WordSource parikh_src;
  auto* parikh_cmd = app.add_subcommand("parikh", "Parikh set of all factors");
  add_word_input(parikh_cmd, parikh_src);
  parikh_cmd->callback([&] {
    action = [&] {
      const ParikhSet set = parikh_set(resolve_word(parikh_src, in), guard());
      Table t;
      t.columns = {"zeros", "ones"};
      for (const ParikhVector& v : set.members()) t.rows.push_back({v.zeros, v.ones});
      return t;
    };
  });

  // lyndon
  WordSource lyndon_src;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon, necklace and pre-necklace tests");
  add_word_input(lyndon_cmd, lyndon_src);
  lyndon_cmd->callback([&] {
    action = [&] {
      const BinaryWord w = resolve_word(lyndon_src, in);
      Table t;
      t.columns = {"lyndon", "necklace", "prenecklace"};
      t.rows.push_back({is_lyndon(w), is_necklace(w), is_prenecklace(w)});
      return t;
    };
  });

  // separate
  std::string sep_v;
  std::string sep_w;
  auto* sep_cmd = app.add_subcommand("separate", "Suffix telling two prefix normal words apart");
  sep_cmd->add_option("v", sep_v)->required();
  sep_cmd->add_option("w", sep_w)->required();
  sep_cmd->callback([&] {
    action = [&] {
      const BinaryWord v = resolve_word({.argument = sep_v, .file = {}}, in);
      const BinaryWord w = resolve_word({.argument = sep_w, .file = {}}, in);
      const SeparatingSuffix s = separating_suffix(v, w);
      Table t;
      t.columns = {"suffix", "normal"};
      t.rows.push_back({s.suffix.to_string(), s.normal_side == NormalSide::first ? "v" : "w"});
      return t;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  if (!action) {
    err << "error: no command given\n";
    return usage_error;
  }

  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const ScaleError& e) {
    err << "refused: " << e.what() << " (pass --unsafe-large to override)\n";
    return scale_refusal;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return domain_violation;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return domain_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return domain_violation;
  }

  if (format == "csv") {
    write_csv(out, *result);
  } else if (format == "json") {
    write_json(out, *result);
  } else {
    write_text(out, *result);
  }
  if (status != ok) err << "error: normality deciders disagree\n";
  return status;
}

}  // namespace pnfkit::cli
