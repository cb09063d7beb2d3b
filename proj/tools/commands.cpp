#include "commands.hpp"

#include "realtight/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace rt::cli {

namespace {

struct Range {
  Int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      Int v = std::stoll(text);
      return {v, v};
    }
    Range r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    if (r.lo > r.hi) throw DomainError("empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad integer or range '" + text + "'");
  } catch (const std::out_of_range&) {
    throw DomainError("integer out of range in '" + text + "'");
  }
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

std::vector<LegendrianUnknotDatum> parse_diagram(const std::string& text, std::vector<Int>& raw) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    raw = parse_int_list(text);
    return {};
  }
  if (!j.is_array() || j.empty()) throw DomainError("diagram must be a nonempty list");
  std::vector<LegendrianUnknotDatum> unknots;
  try {
    for (const auto& e : j) {
      if (e.is_number_integer())
        raw.push_back(e.get<Int>());
      else
        unknots.push_back(e.get<LegendrianUnknotDatum>());
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad diagram entry: ") + e.what());
  }
  if (!raw.empty() && !unknots.empty()) throw DomainError("diagram mixes framings and Legendrian unknots");
  return unknots;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json tb_row(Int p, Int q, const std::string& type, const TbValue& t) {
  return json{{"p", p}, {"q", q}, {"type", type}, {"tb_num", t.value.num()}, {"tb_den", t.value.den()}};
}

TbValue tb_for_type(Int p, Int q, LensType t) {
  switch (t) {
    case LensType::B: return tb_type_B(p, q);
    case LensType::C: return tb_type_C(p, q);
    case LensType::Cp: return tb_type_Cprime(p, q);
    default: throw DomainError("tb is computed for types B, C and C'");
  }
}

int sign_of(const std::string& s) {
  if (s == "+" || s == "plus") return 1;
  if (s == "-" || s == "minus") return -1;
  throw DomainError("singularity sign must be + or -");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real tight contact structures on solid tori and lens spaces"};
  app.require_subcommand(1);
  std::function<void()> action;
  std::map<const CLI::App*, std::string> formats;
  std::string format;

  auto add_format = [&](CLI::App* sub, const std::string& def, std::vector<std::string> allowed) {
    formats[sub] = def;
    sub->add_option("--format", formats[sub], "Output format")->check(CLI::IsMember(allowed));
  };

  // farey dist
  auto* farey = app.add_subcommand("farey", "Farey graph queries");
  farey->require_subcommand(1);
  auto* farey_dist = farey->add_subcommand("dist", "Farey distance between two slopes");
  std::string slope_a, slope_b;
  farey_dist->add_option("from", slope_a, "First slope (num/den or inf)")->required();
  farey_dist->add_option("to", slope_b, "Second slope")->required();
  bool with_path = false;
  farey_dist->add_flag("--path", with_path, "Print the counterclockwise path");
  add_format(farey_dist, "text", {"text", "json"});
  farey_dist->callback([&] {
    action = [&] {
      Slope a = Slope::parse(slope_a), b = Slope::parse(slope_b);
      FareyDist d = farey_distance(a, b);
      std::vector<Slope> path = farey_walk(a, b);
      if (format == "json") {
        emit(out, json{{"from", a}, {"to", b}, {"steps", d.steps}, {"path", path}});
        return;
      }
      out << d.steps << "\n";
      if (with_path) {
        for (size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << path[i].str();
        out << "\n";
      }
    };
  });

  // cf expand / eval
  auto* cf = app.add_subcommand("cf", "Negative continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = cf->add_subcommand("expand", "Expand a slope r <= -1");
  std::string cf_slope;
  cf_expand->add_option("--slope,slope", cf_slope, "Slope num/den")->required();
  add_format(cf_expand, "text", {"text", "json"});
  cf_expand->callback([&] {
    action = [&] {
      Slope s = Slope::parse(cf_slope);
      NegCF c = neg_cf_expand(s);
      if (format == "json")
        emit(out, json{{"slope", s}, {"cf", c}});
      else
        out << c.str() << "\n";
    };
  });
  auto* cf_eval = cf->add_subcommand("eval", "Evaluate [a0, ..., ak]");
  std::string cf_coeffs;
  cf_eval->add_option("coeffs", cf_coeffs, "Comma separated coefficients")->required()->allow_extra_args(false);
  add_format(cf_eval, "text", {"text", "json"});
  cf_eval->callback([&] {
    action = [&] {
      NegCF c{parse_int_list(cf_coeffs)};
      Slope s = neg_cf_eval(c.coeffs);
      if (format == "json")
        emit(out, json{{"cf", c}, {"slope", s}});
      else
        out << s.str() << "\n";
    };
  });

  // count
  auto* count = app.add_subcommand("count", "Classification counts and bounds");
  count->require_subcommand(1);
  auto* count_st = count->add_subcommand("solid-torus", "Real tight solid tori with given boundary data");
  std::string real_kind = "c1", st_slope;
  int gamma = 2;
  count_st->add_option("--real", real_kind, "Real structure c1..c4")->default_val("c1");
  count_st->add_option("--slope", st_slope, "Boundary dividing slope")->required();
  count_st->add_option("--gamma", gamma, "Number of dividing curves")->default_val(2);
  add_format(count_st, "text", {"text", "json"});
  count_st->callback([&] {
    action = [&] {
      SolidTorusSpec spec{SolidTorusRealStructure::of(parse_real_kind(real_kind)), Slope::parse(st_slope), gamma};
      CountResult c = count_real_tight(spec);
      if (format == "json")
        emit(out, c);
      else
        out << count_range(c) << "  " << c.note << "\n";
    };
  });
  auto* count_slice = count->add_subcommand("slice", "Real tight basic or genuine double slices");
  std::string slice_kind = "basic";
  count_slice->add_option("--real", real_kind, "Real structure c1..c4")->default_val("c1");
  count_slice->add_option("--kind", slice_kind, "basic or genuine_double")->default_val("basic");
  add_format(count_slice, "text", {"text", "json"});
  count_slice->callback([&] {
    action = [&] {
      CountResult c = count_slices(parse_real_kind(real_kind), parse_slice_kind(slice_kind));
      if (format == "json")
        emit(out, c);
      else
        out << count_range(c) << "  " << c.note << "\n";
    };
  });
  auto* count_lens = count->add_subcommand("lens", "Real tight lens spaces of one real type");
  Int lens_p = 0, lens_q = 1;
  std::string lens_type;
  count_lens->add_option("--p", lens_p, "p (1 gives S3, 2 gives RP3)")->required();
  count_lens->add_option("--q", lens_q, "q")->default_val(1);
  count_lens->add_option("--type", lens_type, "A, B, C or C' (default: all)");
  add_format(count_lens, "text", {"text", "json"});
  count_lens->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, CountResult>> rows;
      if (lens_p == 1 || lens_p == 2) {
        LensSpace::make(lens_p, lens_q);
        rows.emplace_back("any", classify_special(lens_p == 1 ? SpecialManifold::S3 : SpecialManifold::RP3));
      } else {
        LensSpace l = LensSpace::make(lens_p, lens_q);
        std::vector<LensType> types{LensType::A, LensType::B, LensType::C, LensType::Cp};
        if (!lens_type.empty()) types = {parse_lens_type(lens_type)};
        for (LensType t : types) {
          CountResult c = t == LensType::A                              ? l_A(l.p, l.q)
                          : (t == LensType::B || t == LensType::Bp)     ? l_B(l.p, l.q)
                                                                        : l_star(l.p, l.q, t);
          rows.emplace_back(to_string(t), c);
        }
      }
      if (format == "json") {
        json j = json::array();
        for (const auto& [t, c] : rows) {
          json e = c;
          e["type"] = t;
          j.push_back(e);
        }
        emit(out, j);
        return;
      }
      for (const auto& [t, c] : rows) out << t << ": " << count_range(c) << "  " << c.note << "\n";
    };
  });

  // table
  auto* table = app.add_subcommand("table", "Bounds table for L(p,1) and L(p,p-1)");
  std::string p_range = "3..12";
  table->add_option("--p", p_range, "Range a..b")->default_val("3..12");
  add_format(table, "markdown", {"markdown", "csv", "json"});
  table->callback([&] {
    action = [&] {
      Range r = parse_range(p_range);
      auto rows = bounds_table(r.lo, r.hi);
      if (format == "json")
        emit(out, bounds_table_json(rows));
      else if (format == "csv")
        out << bounds_table_csv(rows);
      else
        out << bounds_table_markdown(rows);
    };
  });

  // tb
  auto* tb = app.add_subcommand("tb", "Rational Thurston-Bennequin invariants");
  tb->require_subcommand(0, 1);
  std::string tb_p, tb_type, tb_sign;
  std::optional<Int> tb_q;
  tb->add_option("--p", tb_p, "p or range a..b");
  tb->add_option("--q", tb_q, "q (default p-1)");
  tb->add_option("--type", tb_type, "B, C or C'");
  tb->add_option("--singularity", tb_sign, "+ or -: real component of the A_{p-1} link");
  add_format(tb, "text", {"text", "json"});
  auto* tb_cross = tb->add_subcommand("cross-check", "Compare singularity links with Heegaard values");
  std::string cross_p = "3..100";
  tb_cross->add_option("--p", cross_p, "p or range a..b")->default_val("3..100");
  add_format(tb_cross, "text", {"text", "json"});

  // obstruction
  auto* obstruction = app.add_subcommand("obstruction", "Genus-1 real Heegaard obstruction");
  std::string obs_p;
  std::optional<Int> obs_q;
  obstruction->add_option("--p", obs_p, "p or range a..b")->required();
  obstruction->add_option("--q", obs_q, "1 or p-1 (default both)");
  add_format(obstruction, "text", {"text", "json"});

  // dividing
  auto* dividing = app.add_subcommand("dividing", "Dividing set enumeration and proof replays");
  dividing->require_subcommand(1);
  auto* div_enum = dividing->add_subcommand("enumerate", "Disk matchings or annulus arc systems");
  int disk_m = -1, n_in = -1, n_out = -1, window = 1;
  std::string involution;
  bool count_only = false;
  div_enum->add_option("--disk", disk_m, "Non-crossing matchings of 2m points");
  div_enum->add_option("--n-in", n_in, "Marked points on the inner circle");
  div_enum->add_option("--n-out", n_out, "Marked points on the outer circle");
  div_enum->add_option("--window", window, "Relative twisting window")->default_val(1);
  div_enum->add_option("--involution", involution, "identity, rotation_half, reflection or boundary_swap");
  div_enum->add_flag("--count", count_only, "Print only the number of configurations");
  add_format(div_enum, "text", {"text", "json"});
  auto* div_replay = dividing->add_subcommand("replay", "Replay a case-analysis proof");
  std::string proof;
  div_replay->add_option("proof", proof, "nobasic, vardouble or c2_T_minus1_minus2")->required();
  add_format(div_replay, "text", {"text", "json"});

  // surgery
  auto* surgery = app.add_subcommand("surgery", "Chain surgery diagrams");
  surgery->require_subcommand(1);
  auto* surg_id = surgery->add_subcommand("identify", "Identify the lens space of a chain");
  std::string diagram;
  surg_id->add_option("diagram", diagram, "Framings a,b,c or JSON list of framings or Legendrian unknots")
      ->required();
  add_format(surg_id, "text", {"text", "json"});
  auto* surg_val = surgery->add_subcommand("validate", "Check an equivariance decoration");
  Int sv_tb = -1;
  int sv_coeff = -1;
  std::string sv_eq = "none";
  surg_val->add_option("--tb", sv_tb, "Thurston-Bennequin number")->default_val(-1);
  surg_val->add_option("--contact", sv_coeff, "Contact surgery coefficient +1 or -1")->default_val(-1);
  surg_val->add_option("--equivariance", sv_eq, "c1-invariant, c4-invariant, equivariant-pair or none")
      ->default_val("none");
  add_format(surg_val, "text", {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
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

  // Leaves whose options are read after parsing.
  if (tb_cross->parsed()) {
    action = [&] {
      Range r = parse_range(cross_p);
      json rows = json::array();
      bool all = true;
      for (Int p = r.lo; p <= r.hi; ++p) {
        CrossCheck c = cross_check_links(p);
        all = all && c.pass;
        if (format == "json") {
          rows.push_back(c);
          continue;
        }
        out << "p=" << p << "  plus " << c.plus_link.str() << " vs B " << c.type_b.str() << "  minus "
            << c.minus_link.str() << " vs C' " << c.type_cprime.str() << "  " << (c.pass ? "pass" : "FAIL")
            << "\n";
      }
      if (format == "json") emit(out, rows);
      if (!all) throw DomainError("cross-check failed");
    };
  } else if (tb->parsed()) {
    action = [&] {
      if (tb_p.empty()) throw DomainError("--p is required");
      Range r = parse_range(tb_p);
      json rows = json::array();
      for (Int p = r.lo; p <= r.hi; ++p) {
        Int q = tb_q.value_or(p - 1);
        std::string type;
        TbValue t;
        if (!tb_sign.empty()) {
          int s = sign_of(tb_sign);
          type = s > 0 ? "link+" : "link-";
          t = tb_singularity_link(p, s);
        } else {
          if (tb_type.empty()) throw DomainError("give --type or --singularity");
          LensType lt = parse_lens_type(tb_type);
          type = to_string(lt);
          t = tb_for_type(p, q, lt);
        }
        if (format == "json")
          rows.push_back(tb_row(p, q, type, t));
        else if (r.lo == r.hi)
          out << t.str() << "\n";
        else
          out << p << " " << q << " " << type << " " << t.str() << "\n";
      }
      if (format == "json") emit(out, rows);
    };
  } else if (obstruction->parsed()) {
    action = [&] {
      Range r = parse_range(obs_p);
      json rows = json::array();
      for (Int p = r.lo; p <= r.hi; ++p) {
        std::vector<Int> qs = obs_q ? std::vector<Int>{*obs_q} : std::vector<Int>{1, p - 1};
        for (Int q : qs) {
          ObstructionReport o = genus1_obstruction(p, q);
          if (format == "json") {
            rows.push_back(o);
            continue;
          }
          out << "L(" << p << "," << q << ") type " << to_string(o.heegaard_type) << ": tb_B " << o.tb_b.str()
              << " vs " << o.tb_heegaard.str() << "  " << o.verdict << "\n";
        }
      }
      if (format == "json") emit(out, rows);
    };
  } else if (div_enum->parsed()) {
    action = [&] {
      if (disk_m >= 0) {
        auto ms = enumerate_disk_matchings(disk_m);
        if (format == "json")
          emit(out, count_only ? json(ms.size()) : json(ms));
        else if (count_only)
          out << ms.size() << "\n";
        else
          for (const auto& d : ms) out << json(d).dump() << "\n";
        return;
      }
      if (n_in < 0 || n_out < 0) throw DomainError("give --disk m or both --n-in and --n-out");
      auto systems = enumerate_annulus_systems(n_in, n_out, window);
      if (!involution.empty())
        systems = filter_symmetric(systems,
                                   InvolutionOnMarks::make(parse_involution_kind(involution), n_in, n_out));
      if (format == "json")
        emit(out, count_only ? json(systems.size()) : json(systems));
      else if (count_only)
        out << systems.size() << "\n";
      else
        for (const auto& s : systems) out << json(s).dump() << "\n";
    };
  } else if (div_replay->parsed()) {
    action = [&] {
      ProofReport r = replay_proof(parse_proof_name(proof));
      if (format == "json")
        emit(out, r);
      else
        out << proof_report_text(r);
    };
  } else if (surg_id->parsed()) {
    action = [&] {
      std::vector<Int> raw;
      auto unknots = parse_diagram(diagram, raw);
      ChainDiagram chain = unknots.empty() ? ChainDiagram{raw} : chain_from_unknots(unknots);
      LensSpace l = lens_from_chain(chain);
      if (format == "json")
        emit(out, json{{"chain", chain.coefficients}, {"lens", l}});
      else
        out << l.str() << "\n";
    };
  } else if (surg_val->parsed()) {
    action = [&] {
      LegendrianUnknotDatum d{sv_tb, sv_coeff, parse_equivariance(sv_eq)};
      EquivarianceVerdict v = validate_equivariance(d);
      if (format == "json") {
        emit(out, json{{"datum", d}, {"verdict", v}});
        return;
      }
      out << (v.valid ? "valid" : "invalid") << (v.unique ? ", unique" : "")
          << (v.equivariant ? "" : ", non-equivariant");
      if (v.glue_back_slope) out << ", glue-back slope " << v.glue_back_slope->str();
      out << "  " << v.note << "\n";
    };
  }

  for (const auto& [sub, f] : formats)
    if (sub->parsed()) format = f;
  if (tb_cross->parsed()) format = formats.at(tb_cross);
  if (!action) {
    err << "error: incomplete command\n" << app.help();
    return 2;
  }
  try {
    action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rt::cli
