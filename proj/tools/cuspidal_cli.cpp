// Command-line front end: classification, construction, verification,
// quadratic-transformation orbits, rectification, and degree bounds for
// rational cuspidal plane curves whose largest cusp has multiplicity d-3.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cuspidal/json_io.hpp"

using namespace cuspidal;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

std::vector<std::pair<P1Point, MultiplicitySequence>> theorem_cusps(
    int k, const P1Point& q, const P1Point& p, const P1Point& r) {
  MultiplicitySequence big{2 * k};
  big.insert(big.end(), k, 2);
  return {{q, std::move(big)}, {p, MultiplicitySequence(k, 3)}, {r, {2}}};
}

int run_classify(int dmin, int dmax, bool all) {
  Json out = Json::array();
  for (const auto& [cand, rep] : classify(dmin, dmax))
    if (all || rep.verdict == Verdict::Survivor) out.push_back(to_json(cand, rep));
  std::cout << dump_json(out);
  return 0;
}

int run_construct(int k) {
  std::cout << dump_json(to_json(make_curve(k)));
  return 0;
}

int run_verify(const std::string& path) {
  Json j = read_json_file(path);
  const Json& cj = j.contains("curve") ? j["curve"] : j;
  CurveParameterization curve = curve_from_json(cj);

  std::vector<std::pair<P1Point, MultiplicitySequence>> expected;
  if (cj.contains("marks")) {
    MarkedCurve mc = marked_from_json(cj);
    if (mc.k >= 1)
      expected = theorem_cusps(mc.k, mc.q_param, mc.p_param, mc.r_param);
    else
      expected = {{mc.r_param, {2}}};
  } else if (cj.contains("k") && cj["k"].get<int>() >= 1) {
    expected = theorem_cusps(cj["k"].get<int>(), P1Point::infinity(),
                             P1Point::affine(0), P1Point::affine(1));
  } else {
    // No expectations supplied: take every rational parameter where the
    // map fails to be an immersion and has a nontrivial blow-up history.
    for (const BinaryForm& f : singular_support(curve)) {
      if (f.degree() != 1)
        throw std::invalid_argument("irrational singular parameter");
      P1Point root = f.root();
      MultiplicitySequence seq = mult_sequence(germ_at(curve, root));
      if (!seq.empty()) expected.emplace_back(root, std::move(seq));
    }
  }
  CurveReport report = verify_curve(curve, expected);
  std::cout << dump_json(to_json(report));
  return report.passes ? 0 : 1;
}

int run_cremona(int steps, bool inverse, const std::string& path) {
  MarkedCurve mc = path.empty() ? cubic_seed() : marked_from_json(read_json_file(path));
  for (int i = 0; i < steps; ++i) mc = inverse ? inverse_step(mc) : forward_step(mc);
  std::cout << dump_json(to_json(mc));
  return 0;
}

int run_rectify(const std::string& path) {
  MarkedCurve mc = marked_from_json(read_json_file(path));
  std::vector<QuadraticMap> chain = rectify(mc);
  CurveParameterization image = mc.curve;
  Json maps = Json::array();
  for (const QuadraticMap& m : chain) {
    image = apply(m, image);
    maps.push_back(to_json(m));
  }
  Json out{{"maps", std::move(maps)}, {"line", to_json(image)}};
  std::cout << dump_json(out);
  return image.degree == 1 ? 0 : 1;
}

int run_bounds(int d, int m) {
  BoundsVerdict v = bounds_check(d, m);
  Json out{{"d", d},
           {"m", m},
           {"matsuoka_sakai", v.matsuoka_sakai},
           {"orevkov", v.orevkov}};
  std::cout << dump_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for rational cuspidal plane curves with a cusp of multiplicity degree-3"};
  app.require_subcommand(1);

  int dmin = 6, dmax = 9;
  bool all_candidates = false;
  auto* classify_cmd = app.add_subcommand("classify", "Enumerate and screen candidate cusp data");
  classify_cmd->add_option("--dmin", dmin, "Smallest degree")->required();
  classify_cmd->add_option("--dmax", dmax, "Largest degree")->required();
  classify_cmd->add_flag("--all-candidates", all_candidates,
                         "Include eliminated candidates with reasons");

  int k = 2;
  auto* construct_cmd = app.add_subcommand("construct", "Build the degree-(2k+3) curve");
  construct_cmd->add_option("--k", k, "Level (degree 2k+3)")->required();

  std::string in_file;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a curve JSON file");
  verify_cmd->add_option("--in", in_file, "Curve JSON file")->required();

  int steps = 1;
  bool inverse = false;
  std::string cremona_in;
  auto* cremona_cmd = app.add_subcommand("cremona", "Run the quadratic-map orbit");
  cremona_cmd->add_option("--steps", steps, "Number of steps")->required();
  cremona_cmd->add_flag("--inverse", inverse, "Step toward the cubic");
  cremona_cmd->add_option("--in", cremona_in, "Marked curve JSON (default: the cubic)");

  std::string rectify_in;
  auto* rectify_cmd = app.add_subcommand("rectify", "Transform a marked curve to a line");
  rectify_cmd->add_option("--in", rectify_in, "Marked curve JSON file")->required();

  int bd = 9, bm = 6;
  auto* bounds_cmd = app.add_subcommand("bounds", "Check published degree bounds");
  bounds_cmd->add_option("--d", bd, "Degree")->required();
  bounds_cmd->add_option("--m", bm, "Maximal multiplicity")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(dmin, dmax, all_candidates);
    if (construct_cmd->parsed()) return run_construct(k);
    if (verify_cmd->parsed()) return run_verify(in_file);
    if (cremona_cmd->parsed()) return run_cremona(steps, inverse, cremona_in);
    if (rectify_cmd->parsed()) return run_rectify(rectify_in);
    if (bounds_cmd->parsed()) return run_bounds(bd, bm);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
