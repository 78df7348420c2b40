#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/json_io.hpp"
#include "cayley/phase_regions.hpp"
#include "cayley/verifier.hpp"

namespace {

using namespace cayley;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--set expects comma-separated generator indices: " + text);
    }
  }
  if (out.empty()) throw UsageError("--set must name a nonempty generator set");
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + out_path);
  f << text;
}

WeakPeriodicRule rule_by_label(const std::string& label, const std::vector<int>& a,
                               int k) {
  std::string base = label;
  bool negated = false;
  if (!base.empty() && base[0] == '-') {
    negated = true;
    base = base.substr(1);
  }
  WeakPeriodicRule rule = [&] {
    if (base == "phi'" || base == "phi_prime") return phi_prime(a, k);
    if (base == "phi''" || base == "phi_double_prime") return phi_double_prime(a, k);
    for (int p = 1; p <= 8; ++p)
      if (base == "phi" + std::to_string(p)) return catalog_index2(a, k)[p - 1];
    throw UsageError("unknown rule label: " + label);
  }();
  return negated ? negate(rule) : rule;
}

struct GridRow {
  Rational j1;
  Rational j2;
  RegionLabel label;
};

std::vector<GridRow> compute_grid(int k, const Rational& lo, const Rational& hi,
                                  const Rational& step) {
  if (!(step > Rational(0))) throw UsageError("--step must be positive");
  if (!(lo < hi)) throw UsageError("grid bounds must satisfy min < max");
  std::vector<Rational> axis;
  for (Rational v = lo; v <= hi; v += step) axis.push_back(v);
  std::vector<GridRow> rows;
  for (const auto& j2 : axis)
    for (const auto& j1 : axis) rows.push_back({j1, j2, classify({j1, j2}, k)});
  return rows;
}

std::string detail_string(const RegionLabel& label) {
  switch (label.detail) {
    case RegionDetail::Origin: return "origin";
    case RegionDetail::Interior:
      return "interior:" + std::to_string(label.detail_index);
    case RegionDetail::BoundarySegment:
      return "boundary:" + std::to_string(label.detail_index);
    case RegionDetail::AntipodalBoundary: return "antipodal";
  }
  return "?";
}

std::string members_string(const RegionLabel& label) {
  std::string s;
  for (std::size_t i = 0; i < label.members.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(label.members[i]);
  }
  return s;
}

std::string grid_to_csv(const std::vector<GridRow>& rows) {
  std::string out = "j1,j2,members,detail\n";
  for (const auto& r : rows)
    out += r.j1.str() + "," + r.j2.str() + "," + members_string(r.label) + "," +
           detail_string(r.label) + "\n";
  return out;
}

std::string grid_to_json(const std::vector<GridRow>& rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += "  {\"j1\": \"" + r.j1.str() + "\", \"j2\": \"" + r.j2.str() +
           "\", \"members\": [";
    for (std::size_t m = 0; m < r.label.members.size(); ++m) {
      if (m) out += ", ";
      out += std::to_string(r.label.members[m]);
    }
    out += "], \"detail\": \"" + detail_string(r.label) + "\"}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.num()) / static_cast<double>(r.den());
}

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Grid cells colored by region membership plus the k+2 labeled boundary
// rays: J1 = 2(2i-k) J2 (J2 >= 0) for i = 0..k and J1 = 0 (J2 <= 0).
std::string grid_to_svg(int k, const std::vector<GridRow>& rows, const Rational& lo,
                        const Rational& hi, const Rational& step) {
  constexpr double size = 640.0;
  const double vlo = to_double(lo), vhi = to_double(hi);
  const double scale = size / (vhi - vlo);
  const double cell = to_double(step) * scale;
  auto px = [&](double v) { return (v - vlo) * scale; };
  auto py = [&](double v) { return size - (v - vlo) * scale; };

  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                   "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_coord(size) +
         "\" height=\"" + format_coord(size) + "\" viewBox=\"0 0 " +
         format_coord(size) + " " + format_coord(size) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (const auto& r : rows) {
    std::string fill;
    if (r.label.detail == RegionDetail::Interior)
      fill = kPalette[r.label.detail_index % 8];
    else if (r.label.detail == RegionDetail::Origin)
      fill = "#000000";
    else
      fill = "#888888";
    double x = px(to_double(r.j1)) - cell / 2;
    double y = py(to_double(r.j2)) - cell / 2;
    svg += "<rect x=\"" + format_coord(x) + "\" y=\"" + format_coord(y) +
           "\" width=\"" + format_coord(cell) + "\" height=\"" + format_coord(cell) +
           "\" fill=\"" + fill + "\" fill-opacity=\"0.6\"/>\n";
  }

  auto ray = [&](double dx, double dy, const std::string& name) {
    double t = 2.0 * (vhi - vlo) / std::max(1e-9, std::max(std::abs(dx), std::abs(dy)));
    double x1 = px(0), y1 = py(0);
    double x2 = px(dx * t), y2 = py(dy * t);
    svg += "<line x1=\"" + format_coord(x1) + "\" y1=\"" + format_coord(y1) +
           "\" x2=\"" + format_coord(x2) + "\" y2=\"" + format_coord(y2) +
           "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    double lx = px(dx * t * 0.35), ly = py(dy * t * 0.35);
    svg += "<text x=\"" + format_coord(lx) + "\" y=\"" + format_coord(ly) +
           "\" font-size=\"14\" fill=\"#000000\">" + name + "</text>\n";
  };
  for (int i = 0; i <= k; ++i)
    ray(2.0 * (2 * i - k), 1.0, "B" + std::to_string(i));
  ray(0.0, -1.0, "B");

  svg += "</svg>\n";
  return svg;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact weak-periodic ground states of the competing-interaction "
               "Ising model on the Cayley tree"};
  app.require_subcommand(1);

  int k = 1;
  std::string j1_text = "0", j2_text = "0", set_text, rule_file, label_text;
  std::string format = "json", out_path;
  std::string min_text = "-2", max_text = "2", step_text = "1/2";
  int radius = 6;
  int index = 2;
  unsigned seed = kDefaultCensusSeed;

  auto add_common = [&](CLI::App* cmd, bool with_j) {
    cmd->add_option("--k", k, "tree order k >= 1")->required();
    if (with_j) {
      cmd->add_option("--j1", j1_text, "nearest-neighbor coupling, exact p/q");
      cmd->add_option("--j2", j2_text, "next-nearest-neighbor coupling, exact p/q");
    }
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "region and ground-state set of a coupling point");
  add_common(classify_cmd, true);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "brute-force ground states among all weak-periodic rules");
  add_common(enumerate_cmd, true);
  enumerate_cmd->add_option("--index", index, "subgroup index, 2 or 4");
  enumerate_cmd->add_option("--set", set_text, "generator set A, comma separated")->required();
  enumerate_cmd->add_option("--radius", radius, "verification radius, >= 4");

  auto* verify_cmd = app.add_subcommand("verify", "check one rule against the ground-state criterion");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--rule", rule_file, "rule JSON file");
  verify_cmd->add_option("--label", label_text, "catalog label, e.g. phi8 or -phi'");
  verify_cmd->add_option("--set", set_text, "generator set A for --label");
  verify_cmd->add_option("--radius", radius, "verification radius, >= 4");

  auto* check_cmd = app.add_subcommand("check", "machine-check the census and both theorems");
  add_common(check_cmd, false);
  check_cmd->add_option("--radius", radius, "verification radius, >= 4");
  check_cmd->add_option("--seed", seed, "seed for the sampled census couplings");

  auto* census_cmd = app.add_subcommand("census", "ball-class census against the closed form");
  add_common(census_cmd, false);
  census_cmd->add_option("--seed", seed, "seed for the sampled census couplings");

  auto* grid_cmd = app.add_subcommand("phase-grid", "phase-diagram data over a coupling grid");
  add_common(grid_cmd, false);
  grid_cmd->add_option("--min", min_text, "grid lower bound, exact p/q");
  grid_cmd->add_option("--max", max_text, "grid upper bound, exact p/q");
  grid_cmd->add_option("--step", step_text, "grid step, exact p/q");
  grid_cmd->add_option("--format", format, "csv, json or svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  if (k < 1) throw UsageError("--k must be >= 1");

  if (classify_cmd->parsed()) {
    Coupling j{parse_rational(j1_text), parse_rational(j2_text)};
    auto label = classify(j, k);
    auto descriptor = ground_state_descriptor(j, k);
    write_output(region_report_to_json(k, j, label, descriptor), out_path);
    return 0;
  }

  if (enumerate_cmd->parsed()) {
    Coupling j{parse_rational(j1_text), parse_rational(j2_text)};
    auto results = enumerate_ground_states(index, parse_set(set_text), k, j, radius);
    write_output(enumeration_to_json(results), out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    Coupling j{parse_rational(j1_text), parse_rational(j2_text)};
    WeakPeriodicRule rule = [&] {
      if (!rule_file.empty()) {
        std::ifstream f(rule_file);
        if (!f) throw UsageError("cannot read rule file: " + rule_file);
        std::stringstream buf;
        buf << f.rdbuf();
        return rule_from_json(buf.str());
      }
      if (label_text.empty())
        throw UsageError("verify needs --rule FILE or --label NAME with --set");
      if (set_text.empty()) throw UsageError("--label requires --set");
      return rule_by_label(label_text, parse_set(set_text), k);
    }();
    auto report = verify(rule, j, radius);
    write_output(verification_to_json(rule, report), out_path);
    return 0;
  }

  if (check_cmd->parsed()) {
    if (k > 6) throw UsageError("check supports k <= 6");
    auto census = lemma1_census(k, seed);
    auto t2 = check_theorem2(k, radius);
    auto t3 = check_theorem3(k, radius);
    write_output(check_suite_to_json(census, t2, t3), out_path);
    bool all = census.counts_match && census.energies_match;
    for (const auto& r : t2) all = all && r.agrees;
    for (const auto& r : t3) all = all && r.agrees;
    return all ? 0 : 1;
  }

  if (census_cmd->parsed()) {
    if (k > 6) throw UsageError("census supports k <= 6");
    write_output(census_to_json(lemma1_census(k, seed)), out_path);
    return 0;
  }

  if (grid_cmd->parsed()) {
    Rational lo = parse_rational(min_text);
    Rational hi = parse_rational(max_text);
    Rational step = parse_rational(step_text);
    auto rows = compute_grid(k, lo, hi, step);
    if (format == "csv")
      write_output(grid_to_csv(rows), out_path);
    else if (format == "json")
      write_output(grid_to_json(rows), out_path);
    else if (format == "svg")
      write_output(grid_to_svg(k, rows, lo, hi, step), out_path);
    else
      throw UsageError("--format must be csv, json or svg");
    return 0;
  }

  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
