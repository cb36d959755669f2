// Command-line front end for libech. Links only the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ech/ech.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// Carries an exit-1 failure with its message up to main.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ech_status status, const std::string& context) {
  if (status == ECH_OK) return;
  std::string msg = context + ": " + ech_status_name(status);
  const std::string detail = ech_last_error();
  if (!detail.empty()) msg += ": " + detail;
  throw CliError(msg);
}

struct DomainDeleter {
  void operator()(ech_domain* d) const { ech_domain_free(d); }
};
struct SequenceDeleter {
  void operator()(ech_sequence* s) const { ech_sequence_free(s); }
};
using DomainPtr = std::unique_ptr<ech_domain, DomainDeleter>;
using SequencePtr = std::unique_ptr<ech_sequence, SequenceDeleter>;

DomainPtr parse_domain(const std::string& text, const std::string& flag) {
  ech_domain* d = nullptr;
  const ech_status st = ech_domain_parse(text.c_str(), &d);
  if (st == ECH_ERR_PARSE) {
    std::ostringstream msg;
    msg << flag << ": " << ech_last_error() << "\n  " << text << "\n  "
        << std::string(ech_last_parse_position(), ' ') << '^';
    throw CliError(msg.str());
  }
  check(st, flag);
  return DomainPtr(d);
}

std::string render(ech_rational r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Exact decimal expansion truncated toward zero.
std::string render_decimal(ech_rational r, int digits) {
  const bool negative = r.num < 0;
  unsigned long long n = negative ? 0ULL - static_cast<unsigned long long>(r.num) : static_cast<unsigned long long>(r.num);
  const auto d = static_cast<unsigned long long>(r.den);
  std::string out = std::to_string(n / d);
  unsigned __int128 rem = n % d;
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / d));
      rem %= d;
    }
  }
  if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(out.begin(), '-');
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Output sink: a file when --output is given, otherwise stdout.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw CliError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
  std::ofstream file_;
};

struct OutputOptions {
  std::string format = "csv";
  std::string output;
  int decimal = -1;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--output", o.output, "Write to this file instead of standard output");
}

void emit_table(const ech_sequence* seq, std::uint64_t k_max, const OutputOptions& o) {
  Sink sink(o.output);
  std::ostream& os = sink.os();
  const bool with_decimal = o.decimal >= 0;
  std::string buf;
  buf.reserve(1 << 16);
  auto flush = [&] {
    os << buf;
    buf.clear();
  };
  if (o.format == "csv") {
    buf += with_decimal ? "k,c_k,c_k_decimal\n" : "k,c_k\n";
    for (std::uint64_t k = 0; k <= k_max; ++k) {
      ech_rational v;
      check(ech_sequence_at(seq, k, &v), "capacity");
      buf += std::to_string(k);
      buf += ',';
      buf += render(v);
      if (with_decimal) {
        buf += ',';
        buf += render_decimal(v, o.decimal);
      }
      buf += '\n';
      if (buf.size() > (1 << 16) - 256) flush();
    }
  } else {
    buf += '[';
    for (std::uint64_t k = 0; k <= k_max; ++k) {
      ech_rational v;
      check(ech_sequence_at(seq, k, &v), "capacity");
      if (k) buf += ',';
      buf += "\n  {\"k\": " + std::to_string(k) + ", \"ck\": \"" + render(v) + "\"";
      if (with_decimal) buf += ", \"ck_decimal\": \"" + render_decimal(v, o.decimal) + "\"";
      buf += '}';
      if (buf.size() > (1 << 16) - 256) flush();
    }
    buf += "\n]\n";
  }
  flush();
}

void enforce_union_cap(const ech_domain* d, std::uint64_t k_max, std::uint64_t cap) {
  if (ech_domain_contains_union(d) && k_max > cap)
    throw CliError("--kmax " + std::to_string(k_max) + " exceeds the union cap " + std::to_string(cap) +
                   " (max-plus convolution is quadratic); raise it with --cap");
}

std::vector<ech_rational> read_radii(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open radii file '" + path + "'");
  std::vector<ech_rational> radii;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(b, e - b + 1);
    ech_rational r;
    if (ech_rational_parse(token.c_str(), &r) != ECH_OK || r.num <= 0)
      throw CliError(path + ":" + std::to_string(lineno) + ": expected a positive rational, got '" + token + "'");
    radii.push_back(r);
  }
  if (radii.empty()) throw CliError("radii file '" + path + "' contains no radii");
  return radii;
}

ech_rational parse_rational_flag(const std::string& text, const std::string& flag) {
  ech_rational r;
  if (ech_rational_parse(text.c_str(), &r) != ECH_OK) throw CliError(flag + ": not a rational: '" + text + "'");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ECH capacities of model 4-dimensional domains: tables, volume asymptotics, packing bounds, "
               "embedding obstructions and the Seiberg-Witten upper-bound chain."};
  app.require_subcommand(1, 1);

  // caps
  std::string caps_domain;
  std::uint64_t caps_kmax = 0;
  std::uint64_t caps_cap = 10'000;
  OutputOptions caps_out;
  auto* caps = app.add_subcommand("caps", "Tabulate c_0..c_K of one domain");
  caps->add_option("--domain", caps_domain, "Domain spec, e.g. ball:1 or ellipsoid:1,2")->required();
  caps->add_option("--kmax", caps_kmax, "Largest index K")->required();
  caps->add_option("--cap", caps_cap, "Largest K allowed for specs containing a union")->capture_default_str();
  caps->add_option("--decimal", caps_out.decimal, "Add a decimal column with this many digits")
      ->check(CLI::Range(0, 60));
  add_output_flags(caps, caps_out, "csv");

  // union
  std::vector<std::string> union_parts;
  std::uint64_t union_kmax = 0;
  std::uint64_t union_cap = 10'000;
  OutputOptions union_out;
  auto* uni = app.add_subcommand("union", "Tabulate the capacities of a disjoint union (max-plus convolution)");
  uni->add_option("--part", union_parts, "Domain spec of one component (repeat)")->required();
  uni->add_option("--kmax", union_kmax, "Largest index K")->required();
  uni->add_option("--cap", union_cap, "Largest K allowed")->capture_default_str();
  uni->add_option("--decimal", union_out.decimal, "Add a decimal column with this many digits")
      ->check(CLI::Range(0, 60));
  add_output_flags(uni, union_out, "csv");

  // volume
  std::string vol_domain;
  std::uint64_t vol_klo = 0, vol_khi = 0;
  std::string vol_convention = "liouville";
  std::optional<double> vol_target;
  bool vol_fit = false;
  std::uint64_t vol_cap = 10'000;
  OutputOptions vol_out;
  auto* vol = app.add_subcommand("volume", "Windowed volume estimator c_k^2/(4k) or c_k^2/(2k)");
  vol->add_option("--domain", vol_domain, "Domain spec")->required();
  vol->add_option("--klo", vol_klo, "First index of the window (>= 1)")->required();
  vol->add_option("--khi", vol_khi, "Last index of the window")->required();
  vol->add_option("--convention", vol_convention, "liouville: c^2/(4k); contact: c^2/(2k)")
      ->check(CLI::IsMember({"liouville", "contact"}))
      ->capture_default_str();
  vol->add_option("--target", vol_target, "Expected volume; enables max_abs_deviation");
  vol->add_flag("--fit", vol_fit, "Also report a diagnostic fit estimator ~ a + b/sqrt(k)");
  vol->add_option("--cap", vol_cap, "Largest k_hi allowed for specs containing a union")->capture_default_str();
  add_output_flags(vol, vol_out, "json");

  // pack
  std::string pack_radii;
  std::optional<std::uint64_t> pack_k, pack_klo, pack_khi;
  std::optional<double> pack_depth, pack_eps, pack_contact;
  bool pack_table = false;
  OutputOptions pack_out;
  auto* pack = app.add_subcommand("pack", "Ball-packing lower bounds for the capacities of a collar");
  pack->add_option("--radii", pack_radii, "Text file with one rational radius per line ('#' comments)")->required();
  pack->add_option("--k", pack_k, "Single index: report the lower bound at k");
  pack->add_option("--klo", pack_klo, "Window start for the asymptotic check");
  pack->add_option("--khi", pack_khi, "Window end for the asymptotic check (or table end with --table)");
  pack->add_option("--depth", pack_depth, "Collar depth a > 0 (volume floor)");
  pack->add_option("--epsilon", pack_eps, "Uncovered-volume allowance > 0 (volume floor)");
  pack->add_option("--contact-volume", pack_contact, "vol(Y, lambda) > 0 (volume floor)");
  pack->add_flag("--table", pack_table, "Emit k,bound rows for k = 1..khi instead of a report");
  add_output_flags(pack, pack_out, "json");

  // embed
  std::string embed_from, embed_into;
  std::uint64_t embed_kmax = 10'000;
  OutputOptions embed_out;
  auto* embed = app.add_subcommand("embed", "Check c_k(from) <= c_k(into) for k <= K (exit 2 on violation)");
  embed->add_option("--from", embed_from, "Source domain spec")->required();
  embed->add_option("--into", embed_into, "Target domain spec")->required();
  embed->add_option("--kmax", embed_kmax, "Largest index checked")->capture_default_str();
  add_output_flags(embed, embed_out, "json");

  // swbound
  ech_sw_params sw;
  ech_sw_params_default(&sw);
  std::string sw_delta = "1/32", sw_gamma = "1/256";
  std::string sw_grid = "1e20:1e300:logstep10";
  OutputOptions sw_out;
  auto* swb = app.add_subcommand("swbound", "Evaluate the Seiberg-Witten upper-bound chain along a j grid");
  swb->add_option("--vol", sw.vol, "vol(Y, lambda) > 0")->capture_default_str();
  swb->add_option("--delta", sw_delta, "delta in (0, 1/16), decimal or p/q")->capture_default_str();
  swb->add_option("--gamma", sw_gamma, "gamma in (0, delta/4), decimal or p/q")->capture_default_str();
  swb->add_option("--kappa", sw.kappa, "kappa >= 0")->capture_default_str();
  swb->add_option("--ksf", sw.k_sf, "Spectral-flow constant K > 0")->capture_default_str();
  swb->add_option("--c-energy", sw.c_energy, "Energy-cap constant C >= 0")->capture_default_str();
  swb->add_option("--c4", sw.c4, "C4 >= 0")->capture_default_str();
  swb->add_option("--c10", sw.c10, "C10 >= 0")->capture_default_str();
  swb->add_option("--c11", sw.c11, "C11 >= 0")->capture_default_str();
  swb->add_option("--c12", sw.c12, "C12 >= 0")->capture_default_str();
  swb->add_option("--j-grid", sw_grid, "start:end:logstepF, consecutive j differ by the factor F")
      ->capture_default_str();
  add_output_flags(swb, sw_out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (*caps) {
      auto d = parse_domain(caps_domain, "--domain");
      enforce_union_cap(d.get(), caps_kmax, caps_cap);
      ech_sequence* s = nullptr;
      check(ech_sequence_of(d.get(), caps_kmax, &s), "caps");
      SequencePtr seq(s);
      emit_table(seq.get(), caps_kmax, caps_out);
      return kExitOk;
    }

    if (*uni) {
      if (union_kmax > union_cap)
        throw CliError("--kmax " + std::to_string(union_kmax) + " exceeds the union cap " +
                       std::to_string(union_cap) + "; raise it with --cap");
      std::string spec = "union:(";
      for (std::size_t i = 0; i < union_parts.size(); ++i) {
        parse_domain(union_parts[i], "--part");  // position-annotated errors per part
        spec += (i ? ";" : "") + union_parts[i];
      }
      spec += ")";
      auto d = parse_domain(spec, "--part");
      ech_sequence* s = nullptr;
      check(ech_sequence_of(d.get(), union_kmax, &s), "union");
      SequencePtr seq(s);
      emit_table(seq.get(), union_kmax, union_out);
      return kExitOk;
    }

    if (*vol) {
      if (vol_klo < 1 || vol_klo > vol_khi) throw CliError("window must satisfy 1 <= --klo <= --khi");
      auto d = parse_domain(vol_domain, "--domain");
      enforce_union_cap(d.get(), vol_khi, vol_cap);
      ech_sequence* s = nullptr;
      check(ech_sequence_of(d.get(), vol_khi, &s), "volume");
      SequencePtr seq(s);
      const ech_convention conv = vol_convention == "contact" ? ECH_CONTACT : ECH_LIOUVILLE;
      ech_volume_report r;
      const double* target = vol_target ? &*vol_target : nullptr;
      check(ech_convergence_report(seq.get(), vol_klo, vol_khi, conv, target, &r), "volume");
      std::optional<std::pair<double, double>> fit;
      if (vol_fit && vol_klo < vol_khi) {
        double a = 0, b = 0;
        check(ech_fit_inverse_sqrt(seq.get(), vol_klo, vol_khi, conv, &a, &b), "fit");
        fit = std::make_pair(a, b);
      }
      Sink sink(vol_out.output);
      if (vol_out.format == "json") {
        json j;
        j["convention"] = vol_convention;
        j["k_lo"] = r.k_lo;
        j["k_hi"] = r.k_hi;
        j["estimator_min"] = r.estimator_min;
        j["estimator_max"] = r.estimator_max;
        j["estimator_at_khi"] = r.estimator_at_khi;
        j["target"] = r.has_target ? json(r.target) : json(nullptr);
        j["max_abs_deviation"] = r.has_target ? json(r.max_abs_deviation) : json(nullptr);
        if (fit) j["fit_diagnostic"] = {{"intercept", fit->first}, {"slope", fit->second}};
        sink.os() << j.dump(2) << '\n';
      } else {
        sink.os() << "convention,k_lo,k_hi,estimator_min,estimator_max,estimator_at_khi,target,max_abs_deviation";
        if (fit) sink.os() << ",fit_intercept,fit_slope";
        sink.os() << '\n'
                  << vol_convention << ',' << r.k_lo << ',' << r.k_hi << ',' << fmt_double(r.estimator_min) << ','
                  << fmt_double(r.estimator_max) << ',' << fmt_double(r.estimator_at_khi) << ','
                  << (r.has_target ? fmt_double(r.target) : "") << ','
                  << (r.has_target ? fmt_double(r.max_abs_deviation) : "");
        if (fit) sink.os() << ',' << fmt_double(fit->first) << ',' << fmt_double(fit->second);
        sink.os() << '\n';
      }
      return kExitOk;
    }

    if (*pack) {
      const auto radii = read_radii(pack_radii);
      Sink sink(pack_out.output);
      if (pack_table) {
        if (!pack_khi) throw CliError("--table needs --khi");
        // One fold, then read every index: bound(k) = union c_{k-1}.
        std::string spec = "union:(";
        for (std::size_t i = 0; i < radii.size(); ++i) spec += (i ? ";ball:" : "ball:") + render(radii[i]);
        spec += ")";
        auto d = parse_domain(spec, "--radii");
        ech_sequence* s = nullptr;
        check(ech_sequence_of(d.get(), *pack_khi == 0 ? 0 : *pack_khi - 1, &s), "pack");
        SequencePtr seq(s);
        std::ostream& os = sink.os();
        if (pack_out.format == "csv") {
          os << "k,bound\n";
          for (std::uint64_t k = 1; k <= *pack_khi; ++k) {
            ech_rational v;
            check(ech_sequence_at(seq.get(), k - 1, &v), "pack");
            os << k << ',' << render(v) << '\n';
          }
        } else {
          json rows = json::array();
          for (std::uint64_t k = 1; k <= *pack_khi; ++k) {
            ech_rational v;
            check(ech_sequence_at(seq.get(), k - 1, &v), "pack");
            rows.push_back({{"k", k}, {"bound", render(v)}});
          }
          os << rows.dump(2) << '\n';
        }
        return kExitOk;
      }

      json report;
      json radii_json = json::array();
      for (const auto& r : radii) radii_json.push_back(render(r));
      report["radii"] = radii_json;
      if (pack_k) {
        ech_rational v;
        check(ech_packing_lower_bound(radii.data(), radii.size(), *pack_k, &v), "pack --k");
        report["k"] = *pack_k;
        report["lower_bound"] = render(v);
      }
      if (pack_klo || pack_khi) {
        if (!pack_klo || !pack_khi) throw CliError("--klo and --khi must be given together");
        ech_packing_report r;
        check(ech_packing_asymptotic_check(radii.data(), radii.size(), *pack_klo, *pack_khi, &r), "pack window");
        report["window"] = {{"k_lo", r.k_lo},
                            {"k_hi", r.k_hi},
                            {"min_ratio", r.min_ratio},
                            {"argmin_k", r.argmin_k},
                            {"ball_side", r.ball_side},
                            {"gap", r.gap},
                            {"relative_gap", r.relative_gap}};
      }
      if (pack_depth || pack_eps || pack_contact) {
        if (!pack_depth || !pack_eps || !pack_contact)
          throw CliError("--depth, --epsilon and --contact-volume must be given together");
        ech_packing_floor f;
        check(ech_packing_volume_floor(radii.data(), radii.size(), *pack_depth, *pack_eps, *pack_contact, &f),
              "pack floor");
        report["volume_floor"] = {{"depth", *pack_depth},
                                  {"epsilon", *pack_eps},
                                  {"contact_volume", *pack_contact},
                                  {"floor", f.floor},
                                  {"ball_side", f.ball_side},
                                  {"consistent", f.consistent != 0}};
      }
      if (!pack_k && !pack_klo && !pack_khi && !pack_depth)
        throw CliError("pack needs --k, a --klo/--khi window, or --depth/--epsilon/--contact-volume");
      if (pack_out.format == "json") {
        sink.os() << report.dump(2) << '\n';
      } else {
        sink.os() << "quantity,value\n";
        if (report.contains("k")) {
          sink.os() << "k," << report["k"].get<std::uint64_t>() << '\n';
          sink.os() << "lower_bound," << report["lower_bound"].get<std::string>() << '\n';
        }
        for (const char* section : {"window", "volume_floor"}) {
          if (!report.contains(section)) continue;
          for (auto& [key, value] : report[section].items()) {
            sink.os() << section << '.' << key << ',';
            if (value.is_number_float())
              sink.os() << fmt_double(value.get<double>());
            else
              sink.os() << value.dump();
            sink.os() << '\n';
          }
        }
      }
      return kExitOk;
    }

    if (*embed) {
      auto from = parse_domain(embed_from, "--from");
      auto into = parse_domain(embed_into, "--into");
      ech_obstruction_report r;
      check(ech_check_embedding(from.get(), into.get(), embed_kmax, &r), "embed");
      Sink sink(embed_out.output);
      if (embed_out.format == "json") {
        json j;
        j["from"] = embed_from;
        j["into"] = embed_into;
        j["k_max_checked"] = r.k_max_checked;
        if (r.violation) {
          j["verdict"] = "violation";
          j["index"] = r.index;
          j["from_value"] = render(r.from_value);
          j["into_value"] = render(r.into_value);
        } else {
          j["verdict"] = "no_violation_up_to";
        }
        j["volume_precheck"] = {{"passed", r.volume_ok != 0},
                                {"from_volume", render(r.from_volume)},
                                {"into_volume", render(r.into_volume)}};
        sink.os() << j.dump(2) << '\n';
      } else {
        sink.os() << "k_max_checked,verdict,index,from_value,into_value,volume_precheck,from_volume,into_volume\n"
                  << r.k_max_checked << ',' << (r.violation ? "violation" : "no_violation_up_to") << ','
                  << (r.violation ? std::to_string(r.index) : "") << ','
                  << (r.violation ? render(r.from_value) : "") << ','
                  << (r.violation ? render(r.into_value) : "") << ',' << (r.volume_ok ? "pass" : "fail") << ','
                  << render(r.from_volume) << ',' << render(r.into_volume) << '\n';
      }
      return r.violation ? kExitViolation : kExitOk;
    }

    if (*swb) {
      sw.delta = parse_rational_flag(sw_delta, "--delta");
      sw.gamma = parse_rational_flag(sw_gamma, "--gamma");
      check(ech_sw_params_validate(&sw), "swbound parameters");
      std::size_t n = 0;
      check(ech_sw_curve_grid(&sw, sw_grid.c_str(), nullptr, 0, &n), "--j-grid");
      std::vector<ech_sw_point> pts(n);
      check(ech_sw_curve_grid(&sw, sw_grid.c_str(), pts.data(), pts.size(), &n), "swbound");
      Sink sink(sw_out.output);
      if (sw_out.format == "csv") {
        sink.os() << "j,r_j,r_bar,g,nu,bound,heuristic\n";
        for (const auto& p : pts)
          sink.os() << p.j_text << ',' << p.r_j_text << ',' << p.r_bar_text << ',' << p.g_text << ',' << p.nu_text
                    << ',' << p.bound_text << ',' << p.heuristic_text << '\n';
      } else {
        json rows = json::array();
        for (const auto& p : pts)
          rows.push_back({{"j", p.j_text},
                          {"r_j", p.r_j_text},
                          {"r_bar", p.r_bar_text},
                          {"g", p.g_text},
                          {"ln_g", p.ln_g_text},
                          {"nu", p.nu_text},
                          {"bound", p.bound_text},
                          {"bound_expanded", p.bound_expanded_text},
                          {"heuristic", p.heuristic_text},
                          {"residual_over_j", p.residual_over_j}});
        sink.os() << rows.dump(2) << '\n';
      }
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
