/*
 * Copyright 2026 The Isobenefit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "isobenefit/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isobenefit/field.hpp"
#include "isobenefit/gravity.hpp"
#include "isobenefit/indicators.hpp"
#include "isobenefit/io.hpp"
#include "isobenefit/isolines.hpp"

namespace isobenefit::cli {

namespace {

using nlohmann::json;
using io::format_number;

Error flag_error(const std::string& flag, const std::string& message) {
  return Error(ErrorCode::InvalidArgument, flag + ": " + message);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  for (const auto& part : split_commas(text)) values.push_back(io::parse_number(part, flag));
  if (values.empty()) throw flag_error(flag, "expected a comma-separated list of numbers");
  return values;
}

Point2d parse_point(const std::string& text, const std::string& flag) {
  auto v = parse_list(text, flag);
  if (v.size() != 2) throw flag_error(flag, "expected 'x,y'");
  return {v[0], v[1]};
}

// Options shared by the subcommands that evaluate a scene.
struct Common {
  std::string scene;
  std::string kernel = "rational";
  double efficiency = 1.0;
  std::string grid;
  std::string profile;
  std::string out;
  std::string format;
  unsigned threads = 1;
  double cutoff = 0.0;

  Kernel make_kernel() const {
    auto family = parse_kernel_family(kernel);
    if (!family) throw flag_error("--kernel", "expected rational|gaussian|exponential, got '" + kernel + "'");
    if (!(efficiency > 0.0) || !std::isfinite(efficiency)) {
      throw flag_error("--efficiency", "must be finite and > 0");
    }
    return {*family, efficiency};
  }

  std::optional<std::string_view> profile_name() const {
    if (profile.empty()) return std::nullopt;
    return profile;
  }

  Scene load_scene() const {
    if (scene.empty()) throw flag_error("--scene", "a scene file is required");
    return io::read_scene(scene);
  }

  GridSpec make_grid() const {
    if (grid.empty()) throw flag_error("--grid", "a grid 'x0,y0,cell,ncols,nrows' is required");
    return parse_grid(grid);
  }

  FieldOptions field_options() const {
    if (!(cutoff >= 0.0) || !std::isfinite(cutoff)) throw flag_error("--cutoff", "must be >= 0");
    return {cutoff, std::max(1u, threads)};
  }

  void check_profile(const Scene& s) const {
    if (!profile.empty() && !s.profiles.count(profile) && profile != kBaselineName) {
      throw Error(ErrorCode::UnknownProfile, "--profile: no profile named '" + profile + "' in " + scene);
    }
  }
};

void add_scene_options(CLI::App* cmd, Common& c, bool with_grid = true) {
  cmd->add_option("--scene", c.scene, "Scene file (.json or .csv)");
  cmd->add_option("--kernel", c.kernel, "Decay law: rational|gaussian|exponential")
      ->capture_default_str();
  cmd->add_option("--efficiency,-E", c.efficiency, "Moving efficiency E")->capture_default_str();
  cmd->add_option("--profile", c.profile, "Preference profile to apply");
  if (with_grid) {
    cmd->add_option("--grid", c.grid, "Grid as x0,y0,cell,ncols,nrows (x0,y0 = lower-left cell centre)");
    cmd->add_option("--threads", c.threads, "Worker threads for field evaluation")->capture_default_str();
    cmd->add_option("--cutoff", c.cutoff, "Skip contributions with |B| below this (0 = off)")
        ->capture_default_str();
  }
  cmd->add_option("--out,-o", c.out, "Output path (stdout when omitted)");
}

// Writes machine-readable output to --out, or to stdout when no path is given.
void emit(const Common& c, std::ostream& out, const std::string& content) {
  if (c.out.empty()) {
    out << content;
  } else {
    io::write_file_atomic(c.out, content);
  }
}

io::RasterFormat raster_format(const Common& c) {
  std::string fmt = c.format;
  if (fmt.empty()) {
    auto ext = std::filesystem::path(c.out).extension().string();
    fmt = ext == ".asc" ? "asc" : "csv";
  }
  if (fmt == "csv") return io::RasterFormat::Csv;
  if (fmt == "asc") return io::RasterFormat::Asc;
  throw flag_error("--format", "rasters are written as csv or asc, got '" + fmt + "'");
}

std::filesystem::path companion_path(const std::string& out, const std::string& tag) {
  std::filesystem::path p(out);
  auto ext = p.extension();
  p.replace_extension();
  p += "." + tag;
  p += ext;
  return p;
}

json uniformity_json(const UniformityResult& u) {
  return {{"u", u.u}, {"mean", u.mean}, {"stddev", u.stddev}, {"m", u.count},
          {"interpret_with_care", u.interpret_with_care}};
}

json summary_json(const SummaryStats& s) {
  return {{"total", s.total}, {"mean", s.mean}, {"min", s.min}, {"max", s.max}, {"count", s.count}};
}

json breakpoint_json(const BreakPoint& bp) {
  json j = {{"x", bp.position.x()},
            {"y", bp.position.y()},
            {"distance_from_1", bp.distance_from_1},
            {"distance_from_2", bp.distance_from_2}};
  if (bp.benefit_at_point) j["benefit"] = *bp.benefit_at_point;
  return j;
}

std::string describe(const UniformityResult& u) {
  std::ostringstream os;
  os << "U=" << format_number(u.u) << " mean=" << format_number(u.mean)
     << " sd=" << format_number(u.stddev) << " m=" << u.count;
  if (u.interpret_with_care) os << " (negative mean: interpret with care)";
  return os.str();
}

// ---------------------------------------------------------------------------

struct FieldCmd {
  Common c;
  bool split = false;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("field", "Evaluate the benefit field on a grid");
    add_scene_options(cmd, c);
    cmd->add_option("--format", c.format, "csv|asc (default from --out extension, else csv)");
    cmd->add_flag("--split", split, "Also write .positive/.negative companion rasters");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    const auto kernel = c.make_kernel();
    const auto grid = c.make_grid();
    const auto options = c.field_options();
    const auto format = raster_format(c);
    if (split && c.out.empty()) throw flag_error("--split", "requires --out");
    const Scene scene = c.load_scene();
    c.check_profile(scene);
    const auto field = evaluate_field(scene, c.profile_name(), kernel, grid, options);
    const auto total = io::format_raster(field.total, format);
    if (split) {
      const auto positive = io::format_raster(field.positive, format);
      const auto negative = io::format_raster(field.negative, format);
      io::write_file_atomic(companion_path(c.out, "positive"), positive);
      io::write_file_atomic(companion_path(c.out, "negative"), negative);
    }
    emit(c, out, total);
  }
};

struct IsolinesCmd {
  Common c;
  std::string raster;
  std::string levels;
  int nlevels = 0;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("isolines", "Extract isobenefit lines as GeoJSON");
    add_scene_options(cmd, c);
    cmd->add_option("--raster", raster, "Contour an existing raster (.csv or .asc) instead of a scene");
    cmd->add_option("--levels", levels, "Explicit levels a,b,c");
    cmd->add_option("--nlevels", nlevels, "N levels equally spaced strictly between min and max");
    cmd->add_option("--format", c.format, "geojson");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    if (!c.format.empty() && c.format != "geojson") {
      throw flag_error("--format", "isolines are written as geojson");
    }
    if (levels.empty() == (nlevels == 0)) {
      throw flag_error("--levels/--nlevels", "give exactly one of the two");
    }
    if (!levels.empty() && nlevels != 0) throw flag_error("--nlevels", "conflicts with --levels");
    if (nlevels < 0) throw flag_error("--nlevels", "must be >= 1");
    LevelSpec<double> spec = LevelCount{nlevels};
    if (!levels.empty()) spec = parse_list(levels, "--levels");

    Raster input;
    if (!raster.empty()) {
      input = io::read_raster(raster);
    } else {
      const auto kernel = c.make_kernel();
      const auto grid = c.make_grid();
      const auto options = c.field_options();
      const Scene scene = c.load_scene();
      c.check_profile(scene);
      input = evaluate_field(scene, c.profile_name(), kernel, grid, options).total;
    }
    const auto contours = extract_isolines(input, spec);
    emit(c, out, io::contours_to_geojson(contours).dump(2) + "\n");
  }
};

struct UniformityCmd {
  Common c;
  std::string raster;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("uniformity", "Uniformity coefficient and summary statistics");
    add_scene_options(cmd, c);
    cmd->add_option("--raster", raster, "Measure an existing raster (.csv or .asc) instead of a scene");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    std::vector<std::pair<std::string, Raster>> parts;
    if (!raster.empty()) {
      parts.emplace_back("all", io::read_raster(raster));
    } else {
      const auto kernel = c.make_kernel();
      const auto grid = c.make_grid();
      const auto options = c.field_options();
      const Scene scene = c.load_scene();
      c.check_profile(scene);
      auto field = evaluate_field(scene, c.profile_name(), kernel, grid, options);
      parts.emplace_back("all", std::move(field.total));
      parts.emplace_back("positive", std::move(field.positive));
      parts.emplace_back("negative", std::move(field.negative));
    }

    json report;
    std::ostringstream text;
    // U of the whole field must exist; the split parts may legitimately be
    // undefined (e.g. a scene without disamenities has an all-zero negative part).
    const auto whole = uniformity(parts.front().second);
    for (const auto& [name, r] : parts) {
      try {
        const auto u = name == "all" ? whole : uniformity(r);
        report["U_" + name] = uniformity_json(u);
        text << "U(" << name << "): " << describe(u) << "\n";
      } catch (const Error& e) {
        report["U_" + name] = {{"error", std::string(to_string(e.code()))}};
        text << "U(" << name << "): undefined (" << to_string(e.code()) << ")\n";
      }
    }
    const auto s = summary(parts.front().second);
    report["summary"] = summary_json(s);
    text << "B: total=" << format_number(s.total) << " mean=" << format_number(s.mean)
         << " min=" << format_number(s.min) << " max=" << format_number(s.max)
         << " m=" << s.count << "\n";

    out << text.str();
    if (!c.out.empty()) io::write_file_atomic(c.out, report.dump(2) + "\n");
  }
};

struct BreakpointCmd {
  Common c;
  std::string pair;
  int resolution = 101;
  bool context = false;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("breakpoint", "Reilly and numeric breakpoints between two amenities");
    add_scene_options(cmd, c, false);
    cmd->add_option("--pair", pair, "Amenity ids 'first,second'")->required();
    cmd->add_option("--resolution", resolution, "Coarse samples along the segment (>= 3)")
        ->capture_default_str();
    cmd->add_flag("--context", context, "Include every other scene amenity in the numeric search");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    const auto kernel = c.make_kernel();
    if (resolution < 3) throw flag_error("--resolution", "must be >= 3");
    auto ids = split_commas(pair);
    if (ids.size() != 2 || ids[0].empty() || ids[1].empty()) {
      throw flag_error("--pair", "expected 'first,second'");
    }
    const Scene scene = c.load_scene();
    c.check_profile(scene);
    const auto resolved = resolve_profile(scene, c.profile_name(), kernel);
    auto find = [&](const std::string& id) -> const Amenity& {
      for (const auto& a : resolved.amenities) {
        if (a.id == id) return a;
      }
      throw flag_error("--pair", "no amenity '" + id + "' in " + c.scene);
    };
    const Amenity& first = find(ids[0]);
    const Amenity& second = find(ids[1]);
    const double d = (first.position - second.position).norm();
    if (!(d > 0.0)) throw Error(ErrorCode::CoincidentAmenities, "--pair: amenities share a position");

    json report = {{"pair", ids},
                   {"distance", d},
                   {"kernel", {{"family", to_string(resolved.kernel.family)},
                               {"efficiency", resolved.kernel.efficiency}}}};
    std::ostringstream text;
    text << "pair " << ids[0] << " - " << ids[1] << ", d=" << format_number(d) << "\n";
    try {
      const auto bp = reilly_breakpoint(first, second);
      report["reilly"] = breakpoint_json(bp);
      text << "Reilly:  " << format_number(bp.distance_from_2) << " from " << ids[1] << " at ("
           << format_number(bp.position.x()) << ", " << format_number(bp.position.y()) << ")\n";
    } catch (const Error& e) {
      report["reilly"] = {{"error", std::string(to_string(e.code()))}};
      text << "Reilly:  undefined (" << to_string(e.code()) << ")\n";
    }
    try {
      std::optional<std::span<const Amenity>> ctx;
      if (context) ctx = std::span<const Amenity>(resolved.amenities);
      const auto bp = numeric_breakpoint(first, second, resolved.kernel, ctx,
                                         BreakpointOptions{resolution, 1e-6});
      report["numeric"] = breakpoint_json(bp);
      text << "Numeric: " << format_number(bp.distance_from_2) << " from " << ids[1] << " at ("
           << format_number(bp.position.x()) << ", " << format_number(bp.position.y())
           << "), B=" << format_number(*bp.benefit_at_point) << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoInteriorMinimum) throw;
      report["numeric"] = {{"error", std::string(to_string(e.code()))}};
      text << "Numeric: undefined (" << to_string(e.code()) << ")\n";
    }
    out << text.str();
    if (!c.out.empty()) io::write_file_atomic(c.out, report.dump(2) + "\n");
  }
};

struct HuffCmd {
  Common c;
  std::string origin;
  double exponent = 1.0;
  bool only_positive = false;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("huff", "Visit probabilities from an origin");
    add_scene_options(cmd, c, false);
    cmd->add_option("--origin", origin, "Origin 'x,y'")->required();
    cmd->add_option("--exponent", exponent, "Distance exponent (extension; 1 = plain A/d)")
        ->capture_default_str();
    cmd->add_flag("--only-positive", only_positive, "Drop amenities with A <= 0 from the choice set");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    const auto at = parse_point(origin, "--origin");
    if (!std::isfinite(exponent)) throw flag_error("--exponent", "must be finite");
    const Scene scene = c.load_scene();
    c.check_profile(scene);
    auto amenities = resolve_profile(scene, c.profile_name(), c.make_kernel()).amenities;
    if (only_positive) {
      std::erase_if(amenities, [](const Amenity& a) { return !(a.attractiveness > 0.0); });
    }
    const auto result = huff_probabilities<double>(at, amenities, exponent);
    std::ostringstream os;
    os << "id,distance,probability\n";
    for (const auto& e : result.entries) {
      os << e.id << ',' << format_number(e.distance) << ',' << format_number(e.probability) << '\n';
    }
    emit(c, out, os.str());
  }
};

struct PggCmd {
  Common c;
  std::string person;
  std::string majority;
  std::string summary_path;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("pgg", "Preference Gap Gain: person field minus majority field");
    add_scene_options(cmd, c);
    cmd->add_option("--person", person, "Profile of the person")->required();
    cmd->add_option("--majority", majority,
                    "Majority profile (default: the scene's designated majority, else the baseline)");
    cmd->add_option("--format", c.format, "csv|asc");
    cmd->add_option("--summary", summary_path, "Write the signed summary as JSON here");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    const auto kernel = c.make_kernel();
    const auto grid = c.make_grid();
    const auto options = c.field_options();
    const auto format = raster_format(c);
    const Scene scene = c.load_scene();
    auto known = [&](const std::string& name) {
      return scene.profiles.count(name) || name == kBaselineName;
    };
    if (!known(person)) {
      throw Error(ErrorCode::UnknownProfile, "--person: no profile named '" + person + "' in " + c.scene);
    }
    if (!majority.empty() && !known(majority)) {
      throw Error(ErrorCode::UnknownProfile, "--majority: no profile named '" + majority + "' in " + c.scene);
    }
    std::optional<std::string_view> majority_arg;
    if (!majority.empty()) majority_arg = majority;
    const auto pgg = pgg_field(scene, person, majority_arg, kernel, grid, options);
    const auto s = pgg_summary(pgg);

    json j = {{"person", person},
              {"majority", majority_name(scene, majority_arg).value_or(std::string(kBaselineName))},
              {"summary", summary_json(s.stats)},
              {"gain_cells", s.gain_cells},
              {"loss_cells", s.loss_cells},
              {"neutral_cells", s.neutral_cells},
              {"gain_total", s.gain_total},
              {"loss_total", s.loss_total}};
    const auto raster_text = io::format_raster(pgg, format);
    if (!summary_path.empty()) io::write_file_atomic(summary_path, j.dump(2) + "\n");
    emit(c, out, raster_text);
    if (!c.out.empty()) {
      out << "PGG " << person << " vs " << j["majority"].get<std::string>() << ": gain cells "
          << s.gain_cells << " (sum " << format_number(s.gain_total) << "), loss cells "
          << s.loss_cells << " (sum " << format_number(s.loss_total) << "), neutral "
          << s.neutral_cells << "\n";
    }
  }
};

struct CurveCmd {
  Common c;
  double attractiveness = 3.0;
  std::string efficiencies = "0.5,1,2";
  double dmax = 10.0;
  int samples = 101;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("curve", "Tabulate decay curves B(d) for several E");
    cmd->add_option("--attractiveness,-A", attractiveness, "Attractiveness A")->capture_default_str();
    cmd->add_option("--efficiencies", efficiencies, "E values, comma-separated")->capture_default_str();
    cmd->add_option("--kernel", c.kernel, "rational|gaussian|exponential")->capture_default_str();
    cmd->add_option("--dmax", dmax, "Largest distance")->capture_default_str();
    cmd->add_option("--samples", samples, "Rows from d=0 to d=dmax inclusive (>= 2)")->capture_default_str();
    cmd->add_option("--out,-o", c.out, "Output path (stdout when omitted)");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    auto family = parse_kernel_family(c.kernel);
    if (!family) throw flag_error("--kernel", "expected rational|gaussian|exponential");
    if (!std::isfinite(attractiveness)) throw flag_error("--attractiveness", "must be finite");
    if (!(dmax > 0.0) || !std::isfinite(dmax)) throw flag_error("--dmax", "must be finite and > 0");
    if (samples < 2) throw flag_error("--samples", "must be >= 2");
    const auto es = parse_list(efficiencies, "--efficiencies");
    for (double e : es) {
      if (!(e > 0.0)) throw flag_error("--efficiencies", "every E must be > 0");
    }
    std::ostringstream os;
    os << "d";
    for (double e : es) os << ",E=" << format_number(e);
    os << '\n';
    for (int k = 0; k < samples; ++k) {
      const double d = dmax * static_cast<double>(k) / static_cast<double>(samples - 1);
      os << format_number(d);
      for (double e : es) os << ',' << format_number(kernel_benefit(attractiveness, d, Kernel{*family, e}));
      os << '\n';
    }
    emit(c, out, os.str());
  }
};

struct SweepCmd {
  Common c;
  std::vector<std::string> scenes;
  std::string efficiencies;

  void setup(CLI::App& app, std::function<void()>& action, std::ostream& out) {
    auto* cmd = app.add_subcommand("sweep", "Tabulate U and summary statistics across E values");
    cmd->add_option("--scene", scenes, "Scene file; repeat to compare scenarios")->required();
    cmd->add_option("--efficiencies", efficiencies, "E values, comma-separated")->required();
    cmd->add_option("--kernel", c.kernel, "rational|gaussian|exponential")->capture_default_str();
    cmd->add_option("--profile", c.profile, "Preference profile to apply");
    cmd->add_option("--grid", c.grid, "Grid as x0,y0,cell,ncols,nrows");
    cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
    cmd->add_option("--out,-o", c.out, "Output path (stdout when omitted)");
    cmd->callback([this, &action, &out] { action = [this, &out] { execute(out); }; });
  }

  void execute(std::ostream& out) {
    const auto es = parse_list(efficiencies, "--efficiencies");
    for (double e : es) {
      if (!(e > 0.0)) throw flag_error("--efficiencies", "every E must be > 0");
    }
    auto family = parse_kernel_family(c.kernel);
    if (!family) throw flag_error("--kernel", "expected rational|gaussian|exponential");
    const auto grid = c.make_grid();
    const auto options = c.field_options();

    std::vector<Scene> loaded;
    for (const auto& path : scenes) {
      Common one = c;
      one.scene = path;
      loaded.push_back(one.load_scene());
      one.check_profile(loaded.back());
    }
    std::ostringstream os;
    os << "scene,E,U,mean,stddev,total,min,max,interpret_with_care\n";
    for (std::size_t s = 0; s < loaded.size(); ++s) {
      for (double e : es) {
        const auto field = evaluate_field(loaded[s], c.profile_name(), Kernel{*family, e}, grid, options);
        const auto stats = summary(field.total);
        os << scenes[s] << ',' << format_number(e) << ',';
        try {
          const auto u = uniformity(field.total);
          os << format_number(u.u) << ',' << format_number(u.mean) << ',' << format_number(u.stddev);
          os << ',' << format_number(stats.total) << ',' << format_number(stats.min) << ','
             << format_number(stats.max) << ',' << (u.interpret_with_care ? 1 : 0) << '\n';
        } catch (const Error& err) {
          if (err.code() != ErrorCode::ZeroMean) throw;
          os << "NA," << format_number(stats.mean) << ",NA," << format_number(stats.total) << ','
             << format_number(stats.min) << ',' << format_number(stats.max) << ",0\n";
        }
      }
    }
    emit(c, out, os.str());
  }
};

}  // namespace

GridSpec parse_grid(const std::string& text) {
  auto v = parse_list(text, "--grid");
  if (v.size() != 5) throw flag_error("--grid", "expected x0,y0,cell,ncols,nrows");
  GridSpec grid;
  grid.origin = {v[0], v[1]};
  grid.cell_size = v[2];
  auto count = [](double x, const char* name) {
    if (!(x >= 1.0) || x != std::floor(x) || x > 1e8) {
      throw flag_error("--grid", std::string(name) + " must be a positive integer");
    }
    return static_cast<Eigen::Index>(x);
  };
  grid.ncols = count(v[3], "ncols");
  grid.nrows = count(v[4], "nrows");
  if (!(grid.cell_size > 0.0)) throw flag_error("--grid", "cell size must be > 0");
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benefit fields, isobenefit lines and indicators for urban amenities", "isobenefit"};
  app.require_subcommand(1);

  std::function<void()> action;
  FieldCmd field;
  IsolinesCmd isolines;
  UniformityCmd uniformity_cmd;
  BreakpointCmd breakpoint;
  HuffCmd huff;
  PggCmd pgg;
  CurveCmd curve;
  SweepCmd sweep;
  field.setup(app, action, out);
  isolines.setup(app, action, out);
  uniformity_cmd.setup(app, action, out);
  breakpoint.setup(app, action, out);
  huff.setup(app, action, out);
  pgg.setup(app, action, out);
  curve.setup(app, action, out);
  sweep.setup(app, action, out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace isobenefit::cli
