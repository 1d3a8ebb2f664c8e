// Command-line front end: parses .whg weighting files, dispatches to the
// library, and emits JSON (machine format), CSV (tabular outputs), or
// text.  Output is deterministic given (inputs, flags, seed), apart from
// the "timing" block.  Vertices are 1-indexed in files and flag lists;
// JSON payloads use the library's 0-indexed form.
//
// Exit codes: 0 success, 1 verify-check failure, 2 usage or input error,
// 3 capacity guard.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdisc/canonical.hpp"
#include "hyperdisc/constructions.hpp"
#include "hyperdisc/core.hpp"
#include "hyperdisc/discrepancy.hpp"
#include "hyperdisc/errors.hpp"
#include "hyperdisc/io.hpp"
#include "hyperdisc/transpositions.hpp"
#include "hyperdisc/verify.hpp"
#include "hyperdisc/wvector.hpp"

namespace {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted
namespace fs = std::filesystem;
using hyperdisc::capacity_error;
using hyperdisc::input_error;
using hyperdisc::Weighting;

constexpr const char* kVersion = "1.0.0";

struct Global {
  int threads = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

int parse_int_token(std::string_view token, const std::string& what) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw input_error("could not parse " + what + " from \"" +
                      std::string(token) + "\"");
  return value;
}

// "1,2,3" with 1-indexed vertices -> 0-indexed list.
std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string_view token(text.data() + pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const int v = parse_int_token(token, "vertex");
    if (v < 1) throw input_error("vertices are 1-indexed; got " +
                                 std::string(token));
    out.push_back(v - 1);
    pos = next + 1;
  }
  return out;
}

// "x1,y1;x2,y2;..." with 1-indexed vertices -> 0-indexed pairs.
std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string::npos) next = text.size();
    const std::vector<int> pair =
        parse_vertex_list(text.substr(pos, next - pos));
    if (pair.size() != 2)
      throw input_error("each swap pair needs exactly two vertices; got \"" +
                        text.substr(pos, next - pos) + "\"");
    out.emplace_back(pair[0], pair[1]);
    pos = next + 1;
  }
  return out;
}

void write_output(const Global& g, const std::string& body) {
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw input_error("cannot open output path " + g.out);
  file << body;
}

void render_text(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(),
                  prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    int index = 0;
    for (const auto& item : j)
      render_text(item, prefix + "[" + std::to_string(index++) + "]", out);
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

json meta_block(const char* command, json parameters) {
  return json{{"command", command},
              {"version", kVersion},
              {"parameters", std::move(parameters)}};
}

// Emits `payload` in the requested format.  `csv` is only set for
// tabular commands; asking for csv elsewhere is a usage error.  `text`
// overrides the generic key = value rendering.
void emit(const Global& g, json payload, double seconds,
          const std::function<std::string()>& csv = {},
          const std::function<std::string()>& text = {}) {
  payload["timing"] = json{{"seconds", seconds}};
  if (g.format == "json") {
    write_output(g, payload.dump(2) + "\n");
  } else if (g.format == "text") {
    if (text) {
      write_output(g, text());
    } else {
      std::string body;
      render_text(payload, "", body);
      write_output(g, body);
    }
  } else if (g.format == "csv") {
    if (!csv)
      throw input_error(
          "csv output is only available for tabular commands (wvector)");
    write_output(g, csv());
  } else {
    throw input_error("unknown format \"" + g.format +
                      "\"; choose json, csv, or text");
  }
}

std::string format_double(double v) { return json(v).dump(); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void write_whg(const Global& g, const Weighting& w) {
  if (g.out.empty()) {
    hyperdisc::write_weighting(w, std::cout);
    return;
  }
  hyperdisc::write_weighting(w, fs::path(g.out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted k-uniform hypergraph discrepancy toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads,
                 "worker threads for exhaustive scans (0 = auto)");
  app.add_option("--seed", g.seed, "random seed (default 0)");
  app.add_option("--out", g.out, "output path (default: stdout)");
  app.add_option("--format", g.format, "json | csv | text (default json)")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  int exit_code = 0;

  // ----- wvector ---------------------------------------------------------
  auto* wv_cmd = app.add_subcommand("wvector", "level profile of a weighting");
  wv_cmd->fallthrough();
  std::string wv_input, wv_method = "canonical";
  std::int64_t wv_samples = 10000;
  wv_cmd->add_option("--input", wv_input, "weighting file (.whg)")
      ->required();
  wv_cmd->add_option("--method", wv_method, "recursive | canonical | mc")
      ->check(CLI::IsMember({"recursive", "canonical", "mc"}));
  wv_cmd->add_option("--samples", wv_samples, "samples for --method mc");
  wv_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting w = hyperdisc::parse_weighting(wv_input);
    hyperdisc::WVector v;
    json params{{"input", wv_input}, {"method", wv_method}};
    if (wv_method == "recursive") {
      v = hyperdisc::wvector_recursive(w);
    } else if (wv_method == "canonical") {
      v = hyperdisc::wvector_canonical(w);
    } else {
      v = hyperdisc::wvector_mc(w, wv_samples, g.seed);
      params["samples"] = wv_samples;
      params["seed"] = g.seed;
    }
    json j{{"n", v.n}, {"k", v.k}, {"method", wv_method}, {"W", v.values}};
    if (!v.std_errors.empty()) j["stderr"] = v.std_errors;
    j["meta"] = meta_block("wvector", params);
    const auto csv = [&v] {
      std::string body = "level,value,stderr\n";
      for (std::size_t i = 0; i < v.values.size(); ++i) {
        const double se = i < v.std_errors.size() ? v.std_errors[i] : 0.0;
        body += std::to_string(i) + "," + format_double(v.values[i]) + "," +
                format_double(se) + "\n";
      }
      return body;
    };
    emit(g, std::move(j), seconds_since(start), csv);
  });

  // ----- disc ------------------------------------------------------------
  auto* disc_cmd =
      app.add_subcommand("disc", "discrepancy of a pair of weightings");
  disc_cmd->fallthrough();
  std::string disc_a, disc_b, disc_method = "exact";
  int disc_restarts = 20;
  disc_cmd->add_option("--a", disc_a, "first weighting (.whg)")->required();
  disc_cmd->add_option("--b", disc_b, "second weighting (.whg)")->required();
  disc_cmd->add_option("--method", disc_method, "exact | heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  disc_cmd->add_option("--restarts", disc_restarts,
                       "heuristic restarts per direction (default 20)");
  disc_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting a = hyperdisc::parse_weighting(disc_a);
    const Weighting b = hyperdisc::parse_weighting(disc_b);
    hyperdisc::DiscrepancyReport rep;
    json params{{"a", disc_a}, {"b", disc_b}, {"method", disc_method}};
    if (disc_method == "exact") {
      rep = hyperdisc::disc_exact(a, b, g.threads);
    } else {
      hyperdisc::SearchParams sp;
      sp.restarts = disc_restarts;
      sp.seed = g.seed;
      rep = hyperdisc::disc_heuristic(a, b, sp);
      params["restarts"] = disc_restarts;
      params["seed"] = g.seed;
    }
    json j{{"baseline", rep.baseline},
           {"disc", rep.disc},
           {"disc_plus", rep.disc_plus},
           {"disc_minus", rep.disc_minus},
           {"method", rep.method},
           {"argmax", rep.argmax.images},
           {"argmin", rep.argmin.images}};
    j["meta"] = meta_block("disc", params);
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- expect ----------------------------------------------------------
  auto* expect_cmd = app.add_subcommand(
      "expect", "average absolute intersection over relabellings");
  expect_cmd->fallthrough();
  std::string exp_a, exp_b, exp_method = "exact";
  std::int64_t exp_samples = 10000;
  expect_cmd->add_option("--a", exp_a, "first weighting (.whg)")->required();
  expect_cmd->add_option("--b", exp_b, "second weighting (.whg)")->required();
  expect_cmd->add_option("--method", exp_method, "exact | mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  expect_cmd->add_option("--samples", exp_samples, "samples for --method mc");
  expect_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting a = hyperdisc::parse_weighting(exp_a);
    const Weighting b = hyperdisc::parse_weighting(exp_b);
    json j{{"method", exp_method}};
    json params{{"a", exp_a}, {"b", exp_b}, {"method", exp_method}};
    if (exp_method == "exact") {
      j["value"] = hyperdisc::exp_abs_exact(a, b, g.threads);
    } else {
      const hyperdisc::McEstimate e =
          hyperdisc::exp_abs_mc(a, b, exp_samples, g.seed);
      j["value"] = e.mean;
      j["stderr"] = e.std_error;
      j["samples"] = e.samples;
      params["samples"] = exp_samples;
      params["seed"] = g.seed;
    }
    j["meta"] = meta_block("expect", params);
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- gamma -----------------------------------------------------------
  auto* gamma_cmd = app.add_subcommand(
      "gamma", "average absolute single-swap displacement");
  gamma_cmd->fallthrough();
  std::string gam_a, gam_b, gam_method = "exact";
  std::int64_t gam_samples = 10000;
  gamma_cmd->add_option("--a", gam_a, "first weighting (.whg)")->required();
  gamma_cmd->add_option("--b", gam_b, "second weighting (.whg)")->required();
  gamma_cmd->add_option("--method", gam_method, "exact | mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  gamma_cmd->add_option("--samples", gam_samples, "samples for --method mc");
  gamma_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting a = hyperdisc::parse_weighting(gam_a);
    const Weighting b = hyperdisc::parse_weighting(gam_b);
    json j{{"method", gam_method}};
    json params{{"a", gam_a}, {"b", gam_b}, {"method", gam_method}};
    if (gam_method == "exact") {
      j["value"] = hyperdisc::gamma_exact(a, b);
    } else {
      const hyperdisc::McEstimate e =
          hyperdisc::gamma_mc(a, b, gam_samples, g.seed);
      j["value"] = e.mean;
      j["stderr"] = e.std_error;
      j["samples"] = e.samples;
      params["samples"] = gam_samples;
      params["seed"] = g.seed;
    }
    j["meta"] = meta_block("gamma", params);
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- polycoeff -------------------------------------------------------
  auto* poly_cmd = app.add_subcommand(
      "polycoeff", "polynomial coefficients of a random swap family");
  poly_cmd->fallthrough();
  std::string poly_a, poly_b, poly_pairs;
  poly_cmd->add_option("--a", poly_a, "first weighting (.whg)")->required();
  poly_cmd->add_option("--b", poly_b, "second weighting (.whg)")->required();
  poly_cmd
      ->add_option("--pairs", poly_pairs,
                   "disjoint swap pairs \"x1,y1;x2,y2;...\" (1-indexed)")
      ->required();
  poly_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting a = hyperdisc::parse_weighting(poly_a);
    const Weighting b = hyperdisc::parse_weighting(poly_b);
    hyperdisc::TranspositionFamily family;
    family.pairs = parse_pair_list(poly_pairs);
    const hyperdisc::PolyCoeffs pc = hyperdisc::poly_coeffs(a, b, family);
    json j{{"coefficients", pc.coefficients},
           {"constant_residual", pc.constant_residual},
           {"high_order_residual", pc.high_order_residual}};
    j["meta"] = meta_block(
        "polycoeff",
        json{{"a", poly_a}, {"b", poly_b}, {"pairs", poly_pairs}});
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- single-disc -----------------------------------------------------
  auto* single_cmd = app.add_subcommand(
      "single-disc", "one-weighting discrepancy over vertex subsets");
  single_cmd->fallthrough();
  std::string single_input;
  single_cmd->add_option("--input", single_input, "weighting file (.whg)")
      ->required();
  single_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting w = hyperdisc::parse_weighting(single_input);
    const hyperdisc::SubsetDiscrepancyReport rep = hyperdisc::single_disc(w);
    json j{{"disc", rep.disc},
           {"disc_plus", rep.disc_plus},
           {"disc_minus", rep.disc_minus},
           {"argmax_set", rep.argmax_set},
           {"argmin_set", rep.argmin_set}};
    j["meta"] = meta_block("single-disc", json{{"input", single_input}});
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- decompose -------------------------------------------------------
  auto* dec_cmd = app.add_subcommand(
      "decompose", "split a weighting into its level components");
  dec_cmd->fallthrough();
  std::string dec_input;
  dec_cmd->add_option("--input", dec_input, "weighting file (.whg)")
      ->required();
  dec_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const Weighting w = hyperdisc::parse_weighting(dec_input);
    const hyperdisc::Decomposition dec = hyperdisc::full_decompose(w);
    const fs::path base = g.out.empty() ? fs::path(dec_input)
                                        : fs::path(g.out);
    json components = json::array();
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      fs::path part = base.parent_path() /
                      (base.stem().string() + ".level" + std::to_string(i) +
                       ".whg");
      hyperdisc::write_weighting(dec.components[i], part);
      components.push_back(json{{"level", i},
                                {"path", part.string()},
                                {"l1_norm", dec.components[i].l1_norm()}});
    }
    json j{{"residual_l1", dec.residual_l1}, {"components", components}};
    j["meta"] = meta_block("decompose", json{{"input", dec_input}});
    emit(g, std::move(j), seconds_since(start));
  });

  // ----- gen -------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "generate weightings (.whg)");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();

  auto* gen_sts = gen_cmd->add_subcommand(
      "sts", "Steiner triple system indicator (n = 1 or 3 mod 6, n >= 7)");
  gen_sts->fallthrough();
  int sts_n = 0;
  gen_sts->add_option("--n", sts_n, "order")->required();
  gen_sts->callback([&] { write_whg(g, hyperdisc::sts(sts_n)); });

  auto* gen_cross = gen_cmd->add_subcommand(
      "crosscut", "indicator of the triples meeting both sides of a split");
  gen_cross->fallthrough();
  int cross_n = 0;
  std::string cross_a;
  gen_cross->add_option("--n", cross_n, "vertex count")->required();
  gen_cross
      ->add_option("--a", cross_a, "one side, e.g. \"1,2,3\" (1-indexed)")
      ->required();
  gen_cross->callback([&] {
    const std::vector<int> side = parse_vertex_list(cross_a);
    write_whg(g, hyperdisc::crosscut(cross_n, side));
  });

  auto* gen_rand = gen_cmd->add_subcommand(
      "random", "Bernoulli(p) indicator, one coin per edge");
  gen_rand->fallthrough();
  int rand_n = 0, rand_k = 0;
  double rand_p = 0.5;
  gen_rand->add_option("--n", rand_n, "vertex count")->required();
  gen_rand->add_option("--k", rand_k, "edge size")->required();
  gen_rand->add_option("--p", rand_p, "edge probability")->required();
  gen_rand->callback([&] {
    write_whg(g, hyperdisc::random_hypergraph(rand_n, rand_k, rand_p, g.seed));
  });

  auto* gen_ortho = gen_cmd->add_subcommand(
      "orthoset", "the k-member orthogonal family, one file per member");
  gen_ortho->fallthrough();
  int ortho_n = 0, ortho_k = 0;
  gen_ortho->add_option("--n", ortho_n, "vertex count")->required();
  gen_ortho->add_option("--k", ortho_k, "edge size")->required();
  gen_ortho->callback([&] {
    if (g.out.empty())
      throw input_error(
          "gen orthoset writes one file per member; provide --out BASE.whg");
    const std::vector<Weighting> family =
        hyperdisc::scaled_phi_family(ortho_n, ortho_k);
    const fs::path base(g.out);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const fs::path part =
          base.parent_path() / (base.stem().string() + ".level" +
                                std::to_string(i + 1) + ".whg");
      hyperdisc::write_weighting(family[i], part);
    }
  });

  auto* gen_phi = gen_cmd->add_subcommand(
      "phi", "signed level-i canonical weighting");
  gen_phi->fallthrough();
  int phi_n = 0, phi_k = 0, phi_i = 0;
  std::string phi_seq;
  gen_phi->add_option("--n", phi_n, "vertex count")->required();
  gen_phi->add_option("--k", phi_k, "edge size")->required();
  gen_phi->add_option("--i", phi_i, "level")->required();
  gen_phi->add_option(
      "--seq", phi_seq,
      "pair sequence \"x1,y1,x2,y2,...\" (1-indexed; default 1,2,...,2i)");
  gen_phi->callback([&] {
    hyperdisc::CanonicalSequence seq;
    if (phi_seq.empty()) {
      seq = hyperdisc::CanonicalSequence::first(phi_i);
    } else {
      seq.vertices = parse_vertex_list(phi_seq);
      if (static_cast<int>(seq.vertices.size()) != 2 * phi_i)
        throw input_error("--seq needs exactly 2*i vertices");
    }
    write_whg(g, hyperdisc::phi(phi_n, phi_k, phi_i, seq));
  });

  // ----- verify ----------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "run the library's self-check suites");
  verify_cmd->fallthrough();
  std::string verify_suite = "all";
  std::string verify_scale = "small";
  verify_cmd->add_option("suite", verify_suite,
                         "\"all\" (default) or one suite name");
  verify_cmd->add_option("--scale", verify_scale,
                         "small (cap n at 7) | full")
      ->check(CLI::IsMember({"small", "full"}));
  verify_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const hyperdisc::VerifyReport report =
        hyperdisc::run_verify(verify_suite, verify_scale, g.threads);
    json checks = json::array();
    for (const auto& check : report.checks) {
      json measured;
      for (const auto& [key, value] : check.measured) measured[key] = value;
      checks.push_back(json{{"name", check.name},
                            {"status", check.status},
                            {"detail", check.detail},
                            {"measured", measured},
                            {"seconds", check.seconds}});
    }
    json j{{"scale", report.scale},
           {"all_passed", report.all_passed()},
           {"checks", checks}};
    j["meta"] = meta_block(
        "verify", json{{"suite", verify_suite}, {"scale", verify_scale}});
    const auto text = [&report] {
      std::string body;
      for (const auto& check : report.checks) {
        char line[64];
        std::snprintf(line, sizeof line, "%-8s %-20s %8.2fs  ",
                      check.status.c_str(), check.name.c_str(),
                      check.seconds);
        body += line;
        body += check.detail + "\n";
      }
      body += report.all_passed() ? "all checks passed\n"
                                  : "CHECKS FAILED\n";
      return body;
    };
    emit(g, std::move(j), seconds_since(start), {}, text);
    if (!report.all_passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
