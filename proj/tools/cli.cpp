#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mahonian/carlitz.hpp"
#include "mahonian/digraphs.hpp"
#include "mahonian/jacobi_rogers.hpp"
#include "mahonian/limits.hpp"
#include "mahonian/permstats.hpp"
#include "mahonian/verify.hpp"

namespace mahonian::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Input the user got wrong; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  unsigned long seed = 0;  // accepted for interface stability; nothing is random
  bool timing = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty()) {
    return {};
  }
  return parse_alphabet(text);
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (g.format == f) {
      return;
    }
  }
  throw UsageError("--format " + g.format + " is not supported by this command");
}

// ------------------------------------------------------------- rendering

std::string scalar_text(const ojson& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  return v.dump();
}

/// Flat record: text as key=value lines, csv as header plus one row.
void print_record(const ojson& record, const Globals& g, std::ostream& out) {
  if (g.format == "json") {
    out << record.dump() << '\n';
    return;
  }
  if (g.format == "csv") {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      const char* sep = first ? "" : ",";
      header += sep + csv_field(key);
      row += sep + csv_field(scalar_text(value));
      first = false;
    }
    out << header << '\n' << row << '\n';
    return;
  }
  for (const auto& [key, value] : record.items()) {
    out << key << '=' << scalar_text(value) << '\n';
  }
}

void print_poly(const Poly& p, const Globals& g, std::ostream& out) {
  if (g.format == "json") {
    out << p.to_json() << '\n';
  } else if (g.format == "csv") {
    out << "coef,monomial\n";
    for (const auto& [m, c] : p.terms()) {
      out << c.get_str() << ',' << m.to_string() << '\n';
    }
  } else {
    out << p.to_string() << '\n';
  }
}

void print_sides(const std::pair<Poly, Poly>& sides, const Globals& g, std::ostream& out) {
  const bool equal = sides.first == sides.second;
  if (g.format == "json") {
    ojson doc;
    doc["lhs"] = ojson::parse(sides.first.to_json());
    doc["rhs"] = ojson::parse(sides.second.to_json());
    doc["equal"] = equal;
    out << doc.dump() << '\n';
  } else if (g.format == "csv") {
    out << "side,poly\n";
    out << "lhs," << csv_field(sides.first.to_string()) << '\n';
    out << "rhs," << csv_field(sides.second.to_string()) << '\n';
  } else {
    out << "lhs=" << sides.first.to_string() << '\n';
    out << "rhs=" << sides.second.to_string() << '\n';
    out << "equal=" << (equal ? "true" : "false") << '\n';
  }
}

void print_table(const LowerTriangular& rows, const char* name, const Globals& g,
                 std::ostream& out) {
  if (g.format == "json") {
    ojson doc;
    doc["N"] = static_cast<int>(rows.size()) - 1;
    doc["entries"] = ojson::array();
    for (const auto& row : rows) {
      auto cells = ojson::array();
      for (const auto& p : row) {
        cells.push_back(p.to_string());
      }
      doc["entries"].push_back(std::move(cells));
    }
    out << doc.dump() << '\n';
    return;
  }
  if (g.format == "csv") {
    out << "n,k,poly\n";
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      const std::string p = rows[n][k].to_string();
      if (g.format == "csv") {
        out << n << ',' << k << ',' << csv_field(p) << '\n';
      } else {
        out << name << '[' << n << "][" << k << "]=" << p << '\n';
      }
    }
  }
}

// -------------------------------------------------------------- enumerate

ojson codes_json(const LaguerreWord& w) { return ojson(w.to_codes()); }

std::string digraph_text(const LaguerreDigraph& d) {
  std::string out;
  for (const auto& [i, j] : d.arrows()) {
    out += (out.empty() ? "" : " ") + std::to_string(i) + "->" + std::to_string(j);
  }
  return out.empty() ? "-" : out;
}

int cmd_enumerate(int n, int k, const std::string& as, const Globals& g, std::ostream& out) {
  require_format(g, {"text", "json", "csv"});
  if (n < 0 || k < 0 || k > n) {
    throw UsageError("need 0 <= k <= n");
  }
  require_within_ceiling(n, "enumerate");
  if (g.format == "csv") {
    out << "index," << as << '\n';
  }
  long long index = 0;
  WordStream(WordSpace{n, k}).visit_all([&](const LaguerreWord& w) {
    std::string text;
    if (as == "digraph") {
      const auto d = word_digraph(w);
      text = g.format == "json" ? d.to_json() : digraph_text(d);
    } else if (as == "matrix") {
      text = word_to_matrix(w).to_json();
    } else {
      text = g.format == "json" ? codes_json(w).dump() : w.to_string();
    }
    if (g.format == "csv") {
      out << index << ',' << csv_field(text) << '\n';
    } else {
      out << text << '\n';
    }
    ++index;
  });
  return kExitPass;
}

// ------------------------------------------------------------------ stats

ojson word_record(const LaguerreWord& w) {
  const StatRecord s = full_stats(w);
  const ZeroOneMatrix m = word_to_matrix(w);
  ojson r;
  r["word"] = w.to_string();
  r["n"] = w.n();
  r["holes"] = w.holes();
  r["des_set"] = s.des_set;
  r["des"] = s.des();
  r["inv_box"] = s.inv_box;
  r["inv0"] = s.inv0;
  r["maj0"] = s.maj0;
  r["between"] = s.between;
  r["inv"] = s.inv;
  r["maj"] = s.maj;
  r["inv_filled"] = s.inv_filled;
  r["inv_holes"] = s.inv_holes;
  r["tilde_inv_filled"] = s.tilde_inv_filled();
  r["image_set"] = s.image_set;
  r["rlmin_set"] = s.rlmin_set;
  r["rlmin"] = s.rlmin();
  r["matrix_inv"] = matrix_survivor_inv(m);
  r["matrix_maj"] = matrix_survivor_maj(m);
  return r;
}

ojson digraph_record(const LaguerreDigraph& d) {
  const Classification c = classify(d);
  ojson r;
  r["n"] = d.n();
  const VertexClass order[] = {VertexClass::pk, VertexClass::val, VertexClass::da,
                               VertexClass::dd, VertexClass::fp};
  for (VertexClass cls : order) {
    std::vector<int> vertices;
    for (int i = 1; i <= d.n(); ++i) {
      if (c.vertex[static_cast<std::size_t>(i) - 1] == cls) {
        vertices.push_back(i);
      }
    }
    const std::string name(to_string(cls));
    r[name] = static_cast<int>(vertices.size());
    r[name + "_vertices"] = vertices;
  }
  r["cyc"] = c.stats.cyc;
  r["paths"] = c.stats.paths;
  r["word"] = digraph_word(d).to_string();
  return r;
}

ojson multiset_record(const MultisetWord& w) {
  const MultisetWord p = carlitz_psi(w);
  ojson r;
  r["word"] = w.to_string();
  r["alphabet"] = w.multiplicities();
  r["des_set"] = descent_set(w.letters());
  r["inv"] = inversions(w.letters());
  r["maj"] = major_index(w.letters());
  r["b_code"] = b_code(w);
  r["rlmin_set"] = rlmin_multiset(w);
  r["psi"] = p.to_string();
  r["psi_maj"] = major_index(p.letters());
  r["psi_rlmin_set"] = rlmin_multiset(p);
  return r;
}

LaguerreWord word_from_json(const std::string& text) {
  try {
    return LaguerreWord::from_codes(ojson::parse(text).get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad word JSON: ") + e.what());
  }
}

// ------------------------------------------------------------------ verify

ojson report_json(const VerifyReport& r, bool timing) {
  ojson doc;
  doc["id"] = r.id;
  doc["bounds"] = r.bounds;
  doc["status"] = r.pass ? "pass" : "fail";
  doc["cases"] = r.cases;
  if (r.counterexample) {
    doc["counterexample"] = {{"object", r.counterexample->object},
                             {"lhs", r.counterexample->lhs},
                             {"rhs", r.counterexample->rhs}};
  }
  if (timing) {
    doc["seconds"] = r.seconds;
  }
  return doc;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, std::optional<int> n_max,
               const Globals& g, std::ostream& out) {
  require_format(g, {"text", "json", "csv"});
  if (all == !ids.empty()) {
    throw UsageError("give either verify ids or --all");
  }
  for (const auto& id : ids) {
    if (!is_verify_id(id)) {
      throw UsageError("unknown verify id '" + id + "'");
    }
  }
  VerifyOptions options;
  options.jobs = g.jobs;
  if (all) {
    options.cap = n_max;
  } else {
    options.n_max = n_max;
  }
  const auto& selected = all ? verify_ids() : ids;

  std::vector<VerifyReport> reports;
  for (const auto& id : selected) {
    reports.push_back(run_verify(id, options));
  }
  const auto passed = std::count_if(reports.begin(), reports.end(),
                                    [](const VerifyReport& r) { return r.pass; });
  const bool ok = passed == static_cast<long>(reports.size());

  if (g.format == "json") {
    ojson doc;
    doc["reports"] = ojson::array();
    for (const auto& r : reports) {
      doc["reports"].push_back(report_json(r, g.timing));
    }
    doc["pass"] = ok;
    out << doc.dump() << '\n';
  } else if (g.format == "csv") {
    out << "id,bounds,status,cases,object,lhs,rhs" << (g.timing ? ",seconds" : "") << '\n';
    for (const auto& r : reports) {
      const Counterexample none;
      const Counterexample& c = r.counterexample ? *r.counterexample : none;
      out << r.id << ',' << csv_field(r.bounds) << ',' << (r.pass ? "pass" : "fail") << ','
          << r.cases << ',' << csv_field(c.object) << ',' << csv_field(c.lhs) << ','
          << csv_field(c.rhs);
      if (g.timing) {
        out << ',' << std::fixed << std::setprecision(3) << r.seconds;
      }
      out << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.bounds << " cases=" << r.cases;
      if (g.timing) {
        out << " time=" << std::fixed << std::setprecision(3) << r.seconds << 's';
      }
      out << '\n';
      if (r.counterexample) {
        out << "  object: " << r.counterexample->object << '\n';
        out << "  lhs: " << r.counterexample->lhs << '\n';
        out << "  rhs: " << r.counterexample->rhs << '\n';
      }
    }
    if (reports.size() > 1) {
      out << passed << '/' << reports.size() << " passed\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

// -------------------------------------------------------------------- poly

QStatistic parse_statistic(const std::string& name) {
  if (name == "maj") return QStatistic::maj;
  if (name == "inv") return QStatistic::inv;
  if (name == "maj0") return QStatistic::maj0;
  if (name == "inv0") return QStatistic::inv0;
  if (name == "tilde_inv_filled") return QStatistic::tilde_inv_filled;
  if (name == "none") return QStatistic::none;
  throw UsageError("unknown statistic '" + name + "'");
}

JRParams params_by_name(const std::string& name) {
  if (name == "generic") {
    return generic_params();
  }
  try {
    return preset(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and identity checks for Mahonian-Stirling statistics on partial permutations",
               "mahonian"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  g.jobs = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--jobs", g.jobs, "Worker threads for enumerations")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Accepted and ignored; every computation is deterministic");
  app.add_flag("--timing", g.timing, "Include wall time in verify reports");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream the Laguerre words on [n] with k holes");
  int en_n = 0;
  int en_k = 0;
  std::string en_as = "word";
  enumerate->add_option("--n", en_n, "Ground-set size")->required();
  enumerate->add_option("--k", en_k, "Number of holes");
  enumerate->add_option("--as", en_as, "Object to print")
      ->check(CLI::IsMember({"word", "digraph", "matrix"}));

  // stats
  auto* stats = app.add_subcommand("stats", "Statistics of one object");
  std::optional<std::string> st_word;
  std::optional<std::string> st_word_json;
  std::optional<std::string> st_digraph;
  std::optional<std::string> st_matrix;
  std::optional<std::string> st_multiset;
  auto* group = stats->add_option_group("object");
  group->add_option("--word", st_word, "Laguerre word, e.g. \"3 2 5 * 1 8 6 *\"");
  group->add_option("--word-json", st_word_json, "Laguerre word as codes, 0 for a hole");
  group->add_option("--digraph", st_digraph, "Digraph JSON {\"n\":..,\"succ\":{..}}");
  group->add_option("--matrix", st_matrix, "Matrix JSON {\"n\":..,\"ones\":[[r,c],..]}");
  group->add_option("--multiset", st_multiset, "Multiset word, e.g. \"2 1 2 6 5 4 4 3\"");
  group->require_option(1);

  // poly
  auto* poly = app.add_subcommand("poly", "Print a distribution or enumerator polynomial");
  poly->require_subcommand(1);
  int p_n = 0;
  int p_k = 0;
  std::string p_stat = "maj";
  bool p_no_rlmin = false;
  std::optional<std::string> p_holes;
  std::optional<std::string> p_image;
  std::string p_alphabet;
  bool p_unshifted = false;
  std::string p_preset = "euler";
  int p_order = 6;

  auto add_nk = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--n", p_n, "Ground-set size")->required();
    if (with_k) {
      sub->add_option("--k", p_k, "Number of holes or paths");
    }
  };
  auto* p_dist = poly->add_subcommand("dist", "Sum of b^rlmin q^stat over words");
  add_nk(p_dist, true);
  p_dist->add_option("--stat", p_stat, "maj, inv, maj0, inv0, tilde_inv_filled or none");
  p_dist->add_flag("--no-rlmin", p_no_rlmin, "Drop the b^rlmin factor");
  p_dist->add_option("--holes", p_holes, "Restrict to this hole set, e.g. 2,3");
  p_dist->add_option("--image", p_image, "Restrict to this image set, e.g. 1,2");
  auto* p_product = poly->add_subcommand("product", "qbinom(n,k) [k+1]_{b,q} ... [n]_{b,q}");
  add_nk(p_product, true);
  auto* p_hrw = poly->add_subcommand("hrw", "Both cleared sides of the HRW identity");
  add_nk(p_hrw, true);
  auto* p_wilson = poly->add_subcommand("wilson", "Both cleared sides of the multiset HRW identity");
  p_wilson->add_option("--alphabet", p_alphabet, "Multiplicities, e.g. 2,1,3")->required();
  auto* p_macmahon = poly->add_subcommand("macmahon", "inv and maj distributions on a multiset");
  p_macmahon->add_option("--alphabet", p_alphabet, "Multiplicities, e.g. 2,1,3")->required();
  auto* p_ld = poly->add_subcommand("ld", "Laguerre digraph enumerator");
  add_nk(p_ld, true);
  p_ld->add_flag("--unshifted", p_unshifted, "Use u1^pk instead of u1^(pk-k)");
  auto* p_cyc = poly->add_subcommand("cyc", "Cycle-statistic permutation enumerator");
  add_nk(p_cyc, false);
  auto* p_lin = poly->add_subcommand("lin", "Linear-statistic permutation enumerator");
  add_nk(p_lin, false);
  auto* p_zhu = poly->add_subcommand("zhu", "Both sides of the cycle interpretation of T_n");
  add_nk(p_zhu, false);
  auto add_preset = [&](CLI::App* sub) {
    sub->add_option("--preset", p_preset, "euler, beta_q, digraph, cyc, alternating, zhu, generic");
    sub->add_option("--order", p_order, "Table order N")->check(CLI::NonNegativeNumber);
  };
  auto* p_mu = poly->add_subcommand("mu", "Moment table mu_{n,k}");
  add_preset(p_mu);
  auto* p_moments = poly->add_subcommand("moments", "J-fraction Taylor coefficients");
  add_preset(p_moments);
  auto* p_ortho = poly->add_subcommand("ortho", "Coefficients of the orthogonal polynomials");
  add_preset(p_ortho);
  auto* p_qbinom = poly->add_subcommand("qbinom", "Gaussian binomial coefficient");
  add_nk(p_qbinom, true);
  auto* p_bqfact = poly->add_subcommand("bqfact", "[1]_{b,q} ... [n]_{b,q}");
  add_nk(p_bqfact, false);

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> v_ids;
  bool v_all = false;
  std::optional<int> v_n_max;
  verify->add_option("ids", v_ids, "Check ids");
  verify->add_flag("--all", v_all, "Run every check");
  verify->add_option("--n-max", v_n_max, "Bound for the named ids; with --all, a cap")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag_callback(
      "--list",
      [&] {
        for (const auto& id : verify_ids()) {
          out << id << " n_max=" << default_bound(id) << '\n';
        }
        throw CLI::Success();
      },
      "List check ids with their default bounds");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    // help requests are Success subclasses and print through exit()
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  set_default_jobs(g.jobs);
  try {
    if (g.format == "dot" && !(stats->parsed() && st_digraph)) {
      throw UsageError("--format dot is only supported by stats --digraph");
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(en_n, en_k, en_as, g, out);
    }
    if (stats->parsed()) {
      if (st_digraph) {
        const auto d = LaguerreDigraph::from_json(*st_digraph);
        if (g.format == "dot") {
          out << to_dot(d);
        } else {
          print_record(digraph_record(d), g, out);
        }
      } else if (st_multiset) {
        print_record(multiset_record(MultisetWord::parse(*st_multiset)), g, out);
      } else if (st_matrix) {
        print_record(word_record(matrix_to_word(ZeroOneMatrix::from_json(*st_matrix))), g, out);
      } else if (st_word_json) {
        print_record(word_record(word_from_json(*st_word_json)), g, out);
      } else {
        print_record(word_record(LaguerreWord::parse(*st_word)), g, out);
      }
      return kExitPass;
    }
    if (verify->parsed()) {
      return cmd_verify(v_ids, v_all, v_n_max, g, out);
    }
    // poly
    if (p_n < 0 || p_k < 0) {
      throw UsageError("--n and --k must be nonnegative");
    }
    if (p_dist->parsed()) {
      WordSpace space{p_n, p_k};
      if (p_holes) {
        space.holes = parse_int_list(*p_holes);
      }
      if (p_image) {
        space.image = parse_int_list(*p_image);
      }
      print_poly(distribution(space, {parse_statistic(p_stat), !p_no_rlmin}, g.jobs), g, out);
    } else if (p_product->parsed()) {
      print_poly(mahonian_stirling_product(p_n, p_k), g, out);
    } else if (p_hrw->parsed()) {
      print_sides(hrw_sides(p_n, p_k, g.jobs), g, out);
    } else if (p_wilson->parsed()) {
      print_sides(wilson_sides(parse_alphabet(p_alphabet)), g, out);
    } else if (p_macmahon->parsed()) {
      print_sides(macmahon_sides(parse_alphabet(p_alphabet)), g, out);
    } else if (p_ld->parsed()) {
      print_poly(ld_enumerator(p_n, p_k, !p_unshifted, g.jobs), g, out);
    } else if (p_cyc->parsed()) {
      print_poly(perm_cycle_poly(p_n, g.jobs), g, out);
    } else if (p_lin->parsed()) {
      print_poly(perm_linear_poly(p_n, g.jobs), g, out);
    } else if (p_zhu->parsed()) {
      print_sides(zhu_sides(p_n), g, out);
    } else if (p_mu->parsed()) {
      print_table(mu_table(params_by_name(p_preset), p_order).rows(), "mu", g, out);
    } else if (p_ortho->parsed()) {
      print_table(ortho_seq(params_by_name(p_preset), p_order).rows(), "p", g, out);
    } else if (p_moments->parsed()) {
      const Series s = cf_taylor(params_by_name(p_preset), p_order);
      if (g.format == "json") {
        ojson doc;
        doc["N"] = p_order;
        doc["moments"] = ojson::array();
        for (const auto& c : s.coefficients()) {
          doc["moments"].push_back(c.to_string());
        }
        out << doc.dump() << '\n';
      } else {
        if (g.format == "csv") {
          out << "n,poly\n";
        }
        for (std::size_t n = 0; n <= s.order(); ++n) {
          out << (g.format == "csv" ? "" : "mu_") << n << (g.format == "csv" ? "," : "=")
              << (g.format == "csv" ? csv_field(s[n].to_string()) : s[n].to_string()) << '\n';
        }
      }
    } else if (p_qbinom->parsed()) {
      print_poly(q_binomial(p_n, p_k), g, out);
    } else if (p_bqfact->parsed()) {
      print_poly(bq_factorial(p_n), g, out);
    }
    return kExitPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace mahonian::cli
