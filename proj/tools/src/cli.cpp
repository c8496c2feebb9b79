#include "jw/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jw/cyclic/necklace.hpp"
#include "jw/freelie/lie.hpp"
#include "jw/freelie/ranks.hpp"
#include "jw/grouppres/presentation.hpp"
#include "jw/johnson/johnson.hpp"
#include "jw/tangent/derivation.hpp"
#include "jw/util/combinatorics.hpp"

namespace jw::cli {

using nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

ordered_json to_json(const Integer& value) {
  static const Integer limit = Integer(1) << 53;
  if (abs(value) < limit) return value.get_si();
  return value.get_str();
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* z = std::get_if<Integer>(&c)) return z->get_str();
  return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render(const TableDocument& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["title"] = doc.title;
      j["columns"] = doc.columns;
      ordered_json rows = ordered_json::array();
      for (const auto& r : doc.rows) {
        ordered_json row = ordered_json::array();
        for (const auto& c : r) {
          if (const auto* z = std::get_if<Integer>(&c)) {
            row.push_back(to_json(*z));
          } else {
            row.push_back(std::get<std::string>(c));
          }
        }
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      j["provenance"] = doc.provenance;
      for (const auto& [key, value] : doc.extra.items()) j[key] = value;
      os << j.dump() << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << csv_field(doc.columns[i]);
      os << '\n';
      for (const auto& r : doc.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(r[i]));
        os << '\n';
      }
      break;
    }
    case Format::text: {
      std::vector<std::size_t> width(doc.columns.size());
      for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
      for (const auto& r : doc.rows) {
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        os << '\n';
      };
      os << doc.title << '\n';
      line(doc.columns);
      for (const auto& r : doc.rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(cell_text(c));
        line(cells);
      }
      break;
    }
  }
  return os.str();
}

namespace {

// Thrown for verification mismatches detected by a command (exit status 2).
struct Mismatch {
  TableDocument doc;
  std::string message;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) throw std::invalid_argument("bad partition '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty partition");
  return out;
}

std::string format_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::string torsion_text(const std::vector<Integer>& torsion) {
  std::string s;
  for (std::size_t i = 0; i < torsion.size(); ++i) s += (i ? "," : "") + torsion[i].get_str();
  return s;
}

Cell num(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
Cell num(const Integer& v) { return v; }
Cell num(int v) { return Integer(v); }

TableDocument from_table(const johnson::Table& t, std::string title, std::string provenance) {
  TableDocument doc{std::move(title), t.header, {}, std::move(provenance)};
  for (const auto& r : t.rows) {
    std::vector<Cell> row;
    for (const auto& c : r) {
      // Purely numeric cells become integers.
      const bool numeric = !c.empty() && c.find_first_not_of("-0123456789") == std::string::npos && c != "-";
      if (numeric) {
        row.push_back(Integer(c));
      } else {
        row.push_back(c);
      }
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

void add_structure(TableDocument& doc, const exactlin::QuotientStructure& q) {
  doc.extra["free_rank"] = q.free_rank;
  ordered_json t = ordered_json::array();
  for (const auto& d : q.torsion) t.push_back(to_json(d));
  doc.extra["torsion"] = std::move(t);
}

struct Options {
  std::string format = "text";
  std::string out;
  unsigned threads = 0;
  std::string cache;
  int n = 0;
  std::string k;
  int kmax = 0;
  std::string mode = "bar";
  std::string alpha;
  std::string group;
  std::string rep = "standard";
  std::string file;
};

void warm_cache(const Options& o, int n, int kmax) {
  if (o.cache.empty()) return;
  for (int k = 1; k <= kmax; ++k) cached_hall_words(o.cache, n, k);
}

void require_n(int n, int min) {
  if (n < min) throw std::invalid_argument("--n must be at least " + std::to_string(min));
}

grouppres::Presentation load_group(const Options& o) {
  const auto kind = grouppres::parse_group_kind(o.group);
  if (kind == grouppres::GroupKind::file) {
    if (o.file.empty()) throw std::invalid_argument("--group file needs --file PATH");
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("cannot read presentation file " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return grouppres::Presentation::from_text(ss.str());
  }
  require_n(o.n, 2);
  return grouppres::builtin(kind, o.n);
}

TableDocument cmd_witt(const Options& o) {
  require_n(o.n, 1);
  const auto r = parse_range(o.k.empty() ? "1" : o.k);
  if (r.lo < 1) throw std::invalid_argument("--k must be positive");
  warm_cache(o, o.n, r.hi);
  TableDocument doc{"free Lie algebra ranks, n=" + std::to_string(o.n), {}, {{}}, "Witt formula"};
  for (int k = r.lo; k <= r.hi; ++k) {
    doc.columns.push_back("k=" + std::to_string(k));
    doc.rows[0].push_back(num(freelie::witt_rank(o.n, k)));
  }
  return doc;
}

TableDocument cmd_ranks(const Options& o) {
  require_n(o.n, 1);
  const auto r = parse_range(o.k.empty() ? "1..4" : o.k);
  if (r.lo < 1) throw std::invalid_argument("--k must be positive");
  warm_cache(o, o.n, r.hi);
  TableDocument doc{"ranks, n=" + std::to_string(o.n),
                    {"k", "lie", "cyclic", "cyclic_bar", "cyclic_tilde", "p"},
                    {},
                    "Witt formula, necklace counts and the tangential basis size"};
  for (int k = r.lo; k <= r.hi; ++k) {
    doc.rows.push_back({num(k), num(freelie::witt_rank(o.n, k)), num(cyclic::cyclic_rank(o.n, k, cyclic::QuotientMode::full)),
                        num(cyclic::cyclic_rank(o.n, k, cyclic::QuotientMode::bar)),
                        num(cyclic::cyclic_rank(o.n, k, cyclic::QuotientMode::tilde)),
                        num(static_cast<std::uint64_t>(tangent::p_basis(o.n, k).size()))});
  }
  return doc;
}

TableDocument cmd_trace(const Options& o) {
  require_n(o.n, 2);
  const auto r = parse_range(o.k);
  if (r.lo < 1) throw std::invalid_argument("--k must be positive");
  const auto mode = cyclic::parse_mode(o.mode);
  warm_cache(o, o.n, r.hi);
  TableDocument doc{"trace map, n=" + std::to_string(o.n) + ", mode=" + o.mode,
                    {"k", "p", "image", "kernel", "target"},
                    {},
                    "block-wise rank of the trace on the tangential basis"};
  for (int k = r.lo; k <= r.hi; ++k) {
    const auto p = static_cast<std::uint64_t>(tangent::p_basis(o.n, k).size());
    const auto image = johnson::trace_rank(o.n, k, mode, o.threads);
    doc.rows.push_back({num(k), num(p), num(image), num(p - image), num(cyclic::cyclic_rank(o.n, k, mode))});
  }
  return doc;
}

TableDocument cmd_image(const Options& o, std::ostream& err) {
  require_n(o.n, 2);
  const auto r = parse_range(o.k);
  if (r.lo < 1) throw std::invalid_argument("--k must be positive");
  warm_cache(o, o.n, r.hi);
  err << "computing degree-one generated image up to k=" << r.hi << '\n';
  const auto images = johnson::johnson_images(o.n, r.hi, o.threads);
  TableDocument doc{"degree-one generated Johnson image, n=" + std::to_string(o.n),
                    {"k", "image", "trace_kernel", "p"},
                    {},
                    "span of iterated brackets of the degree one generators; bar trace kernel"};
  for (int k = r.lo; k <= r.hi; ++k) {
    const auto p = static_cast<std::uint64_t>(tangent::p_basis(o.n, k).size());
    const auto ker = k == 1 ? p : johnson::trace_kernel_dim(o.n, k, johnson::ImageMethod::orbit, o.threads);
    doc.rows.push_back({num(k), num(images[static_cast<std::size_t>(k - 1)].dim), num(ker), num(p)});
  }
  return doc;
}

TableDocument cmd_calpha(const Options& o) {
  const auto r = parse_range(o.k);
  if (r.lo < 2) throw std::invalid_argument("--k must be at least 2");
  TableDocument doc{"c_alpha and r_alpha", {"k", "alpha", "c_alpha", "r_alpha"}, {},
                    "rank of bar traces per partition, n = number of parts"};
  if (!o.alpha.empty()) {
    const auto parts = parse_parts(o.alpha);
    int sum = 0;
    for (int p : parts) sum += p;
    if (r.lo != r.hi || sum != r.lo) throw std::invalid_argument("--alpha must be a partition of --k");
    const auto a = johnson::c_alpha(parts);
    doc.rows.push_back({num(sum), format_parts(parts), num(a.c_alpha), num(Integer(static_cast<long>(a.r_alpha)))});
    return doc;
  }
  for (int k = r.lo; k <= r.hi; ++k) {
    for (const auto& row : johnson::section8_table(k).rows) {
      doc.rows.push_back({num(k), row[0], Integer(row[1]), Integer(row[2])});
    }
  }
  return doc;
}

TableDocument cmd_table8(const Options& o, std::ostream& err) {
  if (o.kmax < 5) throw std::invalid_argument("--kmax must be at least 5");
  Options copy = o;
  copy.k = "5.." + std::to_string(o.kmax);
  err << "computing c_alpha tables for k=5.." << o.kmax << '\n';
  auto doc = cmd_calpha(copy);
  doc.title = "c_alpha and r_alpha, k=5.." + std::to_string(o.kmax);
  return doc;
}

TableDocument cmd_table7(const Options& o) {
  require_n(o.n, 2);
  warm_cache(o, o.n, 4);
  return from_table(johnson::section7_table(o.n, o.threads), "ranks for k=1..4, n=" + std::to_string(o.n),
                    "degree-one generated image, tangential basis, reduced cyclic words, trace cokernel rank");
}

TableDocument cmd_n3gap(const Options& o, std::ostream& err) {
  if (o.kmax < 1) throw std::invalid_argument("--kmax must be positive");
  warm_cache(o, 3, o.kmax);
  err << "computing n=3 image and trace kernel up to k=" << o.kmax << '\n';
  return from_table(johnson::n3gap_table(o.kmax, o.threads), "image versus trace kernel, n=3",
                    "degree-one generated image and bar trace kernel");
}

TableDocument cmd_coker(const Options& o) {
  require_n(o.n, 1);
  const auto r = parse_range(o.k);
  if (r.lo != r.hi || r.lo < 1) throw std::invalid_argument("--k must be a single positive degree");
  const auto q = johnson::coker_structure(o.n, r.lo, o.threads);
  TableDocument doc{"cokernel of the bar trace, n=" + std::to_string(o.n) + ", k=" + std::to_string(r.lo),
                    {"n", "k", "free_rank", "torsion", "structure"},
                    {{num(o.n), num(r.lo), num(static_cast<std::uint64_t>(q.free_rank)), torsion_text(q.torsion), q.to_string()}},
                    "integer Smith form per content block"};
  add_structure(doc, q);
  return doc;
}

TableDocument cmd_t0530(const Options& o, std::ostream& err) {
  require_n(o.n, 3);
  const auto r = parse_range(o.k);
  if (r.lo != r.hi || r.lo < 1) throw std::invalid_argument("--k must be a single positive degree");
  warm_cache(o, o.n, r.lo);
  err << "checking trace kernels against the image at k=" << r.lo << '\n';
  const auto report = johnson::check_T0530(o.n, r.lo, o.threads);
  TableDocument doc{"trace kernel inside the image, n=" + std::to_string(o.n) + ", k=" + std::to_string(r.lo),
                    {"alpha", "status"},
                    {},
                    "contents with a part equal to one; others skipped"};
  auto key = [](const std::vector<int>& a) { return format_parts(a); };
  for (const auto& a : report.checked) {
    const bool bad = std::find(report.violations.begin(), report.violations.end(), a) != report.violations.end();
    doc.rows.push_back({key(a), bad ? std::string("violation") : std::string("ok")});
  }
  for (const auto& a : report.skipped) doc.rows.push_back({key(a), std::string("skipped")});
  if (!report.ok()) throw Mismatch{doc, std::to_string(report.violations.size()) + " content blocks violate the inclusion"};
  return doc;
}

TableDocument cmd_egens(const Options& o) {
  require_n(o.n, 3);
  warm_cache(o, o.n, 3);
  const auto r = johnson::verify_E_generators(o.n, o.threads);
  TableDocument doc{"degree three generators, n=" + std::to_string(o.n),
                    {"n", "count", "expected", "span", "image"},
                    {{num(o.n), num(static_cast<std::uint64_t>(r.count)), num(r.expected), num(r.span_dim), num(r.image_dim)}},
                    "families E1-E4 bracketed as [[K1,K2],K3]"};
  if (!r.ok()) throw Mismatch{doc, "generator count or span differs from n(n-1)^2(n+1)/3"};
  return doc;
}

TableDocument cmd_h1(const Options& o) {
  const auto p = load_group(o);
  grouppres::LatticeAction action = [&] {
    if (o.rep == "standard") return grouppres::LatticeAction::standard(p);
    if (o.rep == "trivial") return grouppres::LatticeAction::trivial(p);
    throw std::invalid_argument("--rep must be standard or trivial");
  }();
  const auto q = grouppres::h1_twisted(p, action);
  TableDocument doc{"twisted H1, group=" + o.group + (p.n() > 0 ? ", n=" + std::to_string(p.n()) : std::string()) +
                        ", rep=" + o.rep,
                    {"free_rank", "torsion", "structure"},
                    {{num(static_cast<std::uint64_t>(q.free_rank)), torsion_text(q.torsion), q.to_string()}},
                    "crossed homomorphisms modulo principal ones"};
  add_structure(doc, q);
  return doc;
}

TableDocument cmd_h2(const Options& o) {
  require_n(o.n, 3);
  try {
    const auto v = grouppres::h2_psigma_rank(o.n);
    return TableDocument{"rank of R/R3 for the McCool presentation, n=" + std::to_string(o.n),
                         {"n", "rank"},
                         {{num(o.n), num(v)}},
                         "exterior square minus the degree two image, checked against the relator count"};
  } catch (const grouppres::VerificationError& e) {
    throw Mismatch{TableDocument{"h2", {"n"}, {{num(o.n)}}, "inconsistent"}, e.what()};
  }
}

TableDocument cmd_abelianize(const Options& o) {
  const auto p = load_group(o);
  const auto q = grouppres::abelianization(p);
  TableDocument doc{"abelianization, group=" + o.group + (p.n() > 0 ? ", n=" + std::to_string(p.n()) : std::string()),
                    {"free_rank", "torsion", "structure"},
                    {{num(static_cast<std::uint64_t>(q.free_rank)), torsion_text(q.torsion), q.to_string()}},
                    "Smith form of the exponent-sum matrix"};
  add_structure(doc, q);
  return doc;
}

void emit(const TableDocument& doc, const Options& o, std::ostream& out) {
  const auto text = render(doc, parse_format(o.format));
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Johnson homomorphisms of basis-conjugating automorphism groups", "jw"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("JW_CACHE_DIR")) o.cache = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out, "write output to PATH");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    sub->add_option("--cache", o.cache, "Hall basis cache directory (default $JW_CACHE_DIR)");
  };
  auto n_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--n", o.n, "number of generators");
    if (required) opt->required();
  };
  auto k_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--k", o.k, "degree or range a..b");
    if (required) opt->required();
  };

  auto* witt = app.add_subcommand("witt", "free Lie algebra ranks");
  n_opt(witt);
  k_opt(witt);
  auto* ranks = app.add_subcommand("ranks", "Lie, cyclic and tangential ranks");
  n_opt(ranks);
  k_opt(ranks, false);
  auto* trace = app.add_subcommand("trace", "rank of the trace map");
  n_opt(trace);
  k_opt(trace);
  trace->add_option("--mode", o.mode, "full, bar or tilde")->check(CLI::IsMember({"full", "bar", "tilde"}));
  auto* image = app.add_subcommand("image", "degree-one generated Johnson image");
  n_opt(image);
  k_opt(image);
  auto* calpha = app.add_subcommand("calpha", "c_alpha and r_alpha");
  k_opt(calpha);
  calpha->add_option("--alpha", o.alpha, "partition a,b,c");
  auto* table7 = app.add_subcommand("table7", "ranks for k=1..4");
  n_opt(table7);
  auto* table8 = app.add_subcommand("table8", "c_alpha tables for k=5..kmax");
  table8->add_option("--kmax", o.kmax, "largest degree")->required();
  auto* n3gap = app.add_subcommand("n3gap", "image versus trace kernel for n=3");
  n3gap->add_option("--kmax", o.kmax, "largest degree")->required();
  auto* coker = app.add_subcommand("coker", "cokernel of the bar trace");
  n_opt(coker);
  k_opt(coker);
  auto* t0530 = app.add_subcommand("t0530", "trace kernel inside the image on contents with a part one");
  n_opt(t0530);
  k_opt(t0530);
  auto* egens = app.add_subcommand("egens", "degree three generator families");
  n_opt(egens);
  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "mccool, bp, braid, sym or file")->required();
    n_opt(sub, false);
    sub->add_option("--file", o.file, "presentation file for --group file");
  };
  auto* h1 = app.add_subcommand("h1", "twisted first cohomology");
  group_opts(h1);
  h1->add_option("--rep", o.rep, "standard or trivial");
  auto* h2 = app.add_subcommand("h2", "rank of R/R3 for the McCool presentation");
  n_opt(h2);
  auto* abel = app.add_subcommand("abelianize", "abelianization");
  group_opts(abel);
  for (auto* sub : app.get_subcommands({})) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  if (o.threads > 0) util::set_default_threads(o.threads);
  try {
    TableDocument doc;
    if (witt->parsed()) doc = cmd_witt(o);
    else if (ranks->parsed()) doc = cmd_ranks(o);
    else if (trace->parsed()) doc = cmd_trace(o);
    else if (image->parsed()) doc = cmd_image(o, err);
    else if (calpha->parsed()) doc = cmd_calpha(o);
    else if (table7->parsed()) doc = cmd_table7(o);
    else if (table8->parsed()) doc = cmd_table8(o, err);
    else if (n3gap->parsed()) doc = cmd_n3gap(o, err);
    else if (coker->parsed()) doc = cmd_coker(o);
    else if (t0530->parsed()) doc = cmd_t0530(o, err);
    else if (egens->parsed()) doc = cmd_egens(o);
    else if (h1->parsed()) doc = cmd_h1(o);
    else if (h2->parsed()) doc = cmd_h2(o);
    else if (abel->parsed()) doc = cmd_abelianize(o);
    emit(doc, o, out);
    return 0;
  } catch (const Mismatch& m) {
    emit(m.doc, o, out);
    err << "verification failed: " << m.message << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jw::cli
