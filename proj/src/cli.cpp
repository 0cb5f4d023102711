#include "kst/cli.hpp"

#include "kst/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kst {

namespace {

struct TableRow {
    std::string key, value, approx;
};

void print_table(std::ostream& out, const std::vector<TableRow>& rows) {
    std::size_t w1 = 0, w2 = 0;
    for (const auto& r : rows) {
        w1 = std::max(w1, r.key.size());
        w2 = std::max(w2, r.value.size());
    }
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(w1) + 2) << r.key
            << std::setw(static_cast<int>(w2) + 2) << r.value;
        if (!r.approx.empty()) out << r.approx;
        out << "\n";
    }
}

std::string approx(const AlgNum& x) {
    std::ostringstream os;
    os << "~" << std::fixed << std::setprecision(6) << x.to_double();
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read model file: " + path);
    Json j;
    in >> j;
    return j;
}

void emit(std::ostream& out, const Json& j, const std::string& format,
          const std::vector<TableRow>& rows) {
    if (format == "table")
        print_table(out, rows);
    else
        out << j.dump(2) << "\n";
}

long parse_flag_long(const std::string& item, const char* flag) {
    try {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string(flag) + ": malformed integer '" + item + "'");
    }
}

Rational parse_flag_rational(const std::string& item, const char* flag) {
    try {
        return rational_from_string(item);
    } catch (const std::exception&) {
        throw parse_error(std::string(flag) + ": malformed rational '" + item + "'");
    }
}

std::vector<std::pair<long, long>> parse_weight_pairs(const std::string& text) {
    std::vector<std::pair<long, long>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos)
            throw parse_error("--samples: expected 'a,b;a,b;...'");
        out.push_back({parse_flag_long(item.substr(0, comma), "--samples"),
                       parse_flag_long(item.substr(comma + 1), "--samples")});
    }
    if (out.empty()) throw parse_error("--samples: no weight pairs given");
    return out;
}

std::vector<long> parse_long_list(const std::string& text, const char* flag) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_flag_long(item, flag));
    if (out.empty()) throw parse_error(std::string(flag) + ": empty list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_flag_rational(item, flag));
    if (out.empty()) throw parse_error(std::string(flag) + ": empty list");
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kstab: exact K-stability invariants for polarized surfaces"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

    // cubic-delta
    auto* cd = app.add_subcommand("cubic-delta", "delta_x for the cubic surface cases");
    std::string cd_case;
    bool cd_all = false;
    long cd_a = 2, cd_b = 1;
    cd->add_option("--case", cd_case, "eckardt|tacnode|cusp|node|three-lines|line-conic");
    cd->add_flag("--all", cd_all, "all six cases");
    cd->add_option("--a", cd_a, "line-conic weight a");
    cd->add_option("--b", cd_b, "line-conic weight b");

    // zariski
    auto* za = app.add_subcommand("zariski", "chamber structure for a model file");
    std::string za_model;
    za->add_option("--model", za_model, "model JSON path")->required();

    // svalue
    auto* sv = app.add_subcommand("svalue", "refinement summary (S, T, volumes, F, c1, beta)");
    std::string sv_model;
    sv->add_option("--model", sv_model, "model JSON path")->required();

    // adjunction
    auto* ad = app.add_subcommand("adjunction", "adjunction lower bound report");
    std::string ad_model;
    ad->add_option("--model", ad_model, "model JSON path")->required();

    // qm-min
    auto* qm = app.add_subcommand("qm-min", "quasi-monomial minimizer over a weight family");
    std::string qm_family = "line-conic";
    std::string qm_samples = "1,1;2,1;3,1;3,2;4,1;5,2";
    qm->add_option("--family", qm_family, "family name");
    qm->add_option("--samples", qm_samples, "weight pairs 'a,b;a,b;...'");

    // fg-check
    auto* fg = app.add_subcommand("fg-check", "finite-generation certificate");
    std::string fg_a, fg_b;
    fg->add_option("--a", fg_a, "weight a0 (AlgNum literal)")->required();
    fg->add_option("--b", fg_b, "weight b0 (AlgNum literal)")->required();

    // eckardt
    auto* ec = app.add_subcommand("eckardt", "generalized Eckardt point report");
    long ec_n = 0, ec_d = 0;
    ec->add_option("--n", ec_n, "dimension")->required();
    ec->add_option("--d", ec_d, "degree")->required();

    // small-deg
    auto* sd = app.add_subcommand("small-deg", "small degree lower bound (n+1)/(L^n)");
    long sd_n = 0;
    std::string sd_vol;
    sd->add_option("--n", sd_n, "dimension")->required();
    sd->add_option("--vol", sd_vol, "(L^n) as p/q")->required();

    // index-two
    auto* it = app.add_subcommand("index-two", "index-two hypersurface bound report");
    long it_n = 0;
    it->add_option("--n", it_n, "dimension (>= 4)")->required();

    // oracle-sm
    auto* os_ = app.add_subcommand("oracle-sm", "brute-force S_m for monomial models");
    std::string os_model = "p2", os_weights, os_m = "1", os_tol = "3/16";
    long os_degree = 0;
    os_->add_option("--model", os_model, "p1|p2")->check(CLI::IsMember({"p1", "p2"}));
    os_->add_option("--degree", os_degree, "line bundle degree k")->required();
    os_->add_option("--weights", os_weights, "comma list of weights")->required();
    os_->add_option("--m", os_m, "m or comma list of m values");
    os_->add_option("--tol", os_tol, "convergence tolerance p/q");

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("kstab");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cd) {
            std::vector<CubicCase> cases;
            if (cd_all) {
                cases = {CubicCase::of(CubicCase::eckardt), CubicCase::of(CubicCase::tacnode),
                         CubicCase::of(CubicCase::cusp), CubicCase::of(CubicCase::three_lines),
                         CubicCase::of(CubicCase::node), CubicCase::with_weights(2, 1)};
            } else if (!cd_case.empty()) {
                CubicCase c = CubicCase::parse(cd_case);
                if (c.kind == CubicCase::line_conic) c = CubicCase::with_weights(cd_a, cd_b);
                cases = {c};
            } else {
                err << "cubic-delta needs --case or --all\n";
                return 2;
            }
            Json rows = Json::array();
            std::vector<TableRow> table;
            for (const auto& c : cases) {
                AlgNum d = cubic_delta(c);
                rows.push_back(Json{{"case", c.name()},
                                    {"field", field_to_json(d.field())},
                                    {"delta", algnum_to_json(d)},
                                    {"display", d.str()}});
                table.push_back({c.name(), d.str(), approx(d)});
            }
            Json j{{"command", "cubic-delta"},
                   {"input", Json{{"selection", cd_all ? "--all" : cd_case}}},
                   {"cases", rows}};
            emit(out, j, format, table);
            return 0;
        }
        if (*za) {
            Json in = load_json_file(za_model);
            IntersectionLattice lat = lattice_from_json(in);
            auto chambers = nef_chambers(lat);
            Json j{{"command", "zariski"},
                   {"input", Json{{"model", za_model}}},
                   {"field", in.at("field")},
                   {"chambers", chambers_to_json(lat, chambers)}};
            std::vector<TableRow> table;
            for (const auto& ch : chambers) {
                std::string supp;
                for (auto s : ch.support) supp += (supp.empty() ? "" : "+") + lat.classes()[s];
                table.push_back({"[" + ch.t_lo.str() + "," + ch.t_hi.str() + "]",
                                 supp.empty() ? "(nef)" : supp, ch.vol_piece.str()});
            }
            emit(out, j, format, table);
            return 0;
        }
        if (*sv) {
            Json in = load_json_file(sv_model);
            SurfaceBlowupModel m = model_from_json(in);
            RefinementSummary s = refinement_summary(m);
            Json j{{"command", "svalue"},
                   {"input", Json{{"model", sv_model}}},
                   {"field", in.at("field")},
                   {"summary", summary_to_json(s)}};
            std::vector<TableRow> table{{"S", s.s_value.str(), approx(s.s_value)},
                                        {"T", s.t_value.str(), approx(s.t_value)},
                                        {"c1Degree", s.c1_degree.str(), approx(s.c1_degree)},
                                        {"beta", s.beta.str(), approx(s.beta)}};
            for (const auto& [label, v] : s.fixed_part_mults)
                table.push_back({"F@" + label, v.str(), approx(v)});
            emit(out, j, format, table);
            return 0;
        }
        if (*ad) {
            Json in = load_json_file(ad_model);
            SurfaceBlowupModel m = model_from_json(in);
            AdjunctionReport r = adjunction_bound(m);
            Json j{{"command", "adjunction"},
                   {"input", Json{{"model", ad_model}}},
                   {"field", in.at("field")},
                   {"report", adjunction_to_json(r)}};
            std::vector<TableRow> table{{"lambda", r.lambda.str(), approx(r.lambda)}};
            if (!r.degenerate) {
                table.push_back({"r", r.r.str(), approx(r.r)});
                table.push_back({"lowerBound", r.lower_bound.str(), approx(r.lower_bound)});
                table.push_back({"tight", r.tight ? "true" : "false", ""});
            } else {
                table.push_back({"degenerate", "true", ""});
            }
            emit(out, j, format, table);
            return 0;
        }
        if (*qm) {
            if (qm_family != "line-conic")
                throw std::domain_error("unknown family: " + qm_family);
            auto weights = parse_weight_pairs(qm_samples);
            QMResult r = qm_minimize(line_conic_family(), weights);
            Json j{{"command", "qm-min"},
                   {"input", Json{{"family", qm_family}, {"samples", qm_samples}}},
                   {"field", field_to_json(r.value.field())},
                   {"muStar", algnum_to_json(r.mu_star)},
                   {"value", algnum_to_json(r.value)},
                   {"interior", r.interior},
                   {"fitNumerator", poly_to_json(r.fit_num)},
                   {"fitDenominator", poly_to_json(r.fit_den)}};
            std::vector<TableRow> table{{"muStar", r.mu_star.str(), approx(r.mu_star)},
                                        {"value", r.value.str(), approx(r.value)},
                                        {"interior", r.interior ? "true" : "false", ""}};
            emit(out, j, format, table);
            return 0;
        }
        if (*fg) {
            AlgNum a = parse_algnum(fg_a), b = parse_algnum(fg_b);
            FgCheck r = fg_check(a, b);
            Json j{{"command", "fg-check"},
                   {"input", Json{{"a", fg_a}, {"b", fg_b}}},
                   {"field", field_to_json(r.breakpoint.field())},
                   {"breakpoint", algnum_to_json(r.breakpoint)},
                   {"rank", r.rank},
                   {"independent", r.independent}};
            std::vector<TableRow> table{
                {"breakpoint", r.breakpoint.str(), approx(r.breakpoint)},
                {"rank", std::to_string(r.rank), ""},
                {"independent", r.independent ? "true" : "false", ""}};
            emit(out, j, format, table);
            return 0;
        }
        if (*ec) {
            EckardtReport r = eckardt_report(ec_n, ec_d);
            Json j{{"command", "eckardt"},
                   {"input", Json{{"n", ec_n}, {"d", ec_d}}},
                   {"field", field_to_json(FieldDesc::rationals())},
                   {"report", eckardt_to_json(r)}};
            std::vector<TableRow> table{{"S_H", r.s_h.str(), approx(r.s_h)},
                                        {"delta_H", r.delta_h.str(), approx(r.delta_h)}};
            if (r.has_delta_x) table.push_back({"delta_X", r.delta_x.str(), approx(r.delta_x)});
            emit(out, j, format, table);
            return 0;
        }
        if (*sd) {
            AlgNum vol(parse_flag_rational(sd_vol, "--vol"));
            AlgNum bound = small_deg_bound(sd_n, vol);
            Json j{{"command", "small-deg"},
                   {"input", Json{{"n", sd_n}, {"vol", sd_vol}}},
                   {"field", field_to_json(bound.field())},
                   {"bound", algnum_to_json(bound)}};
            emit(out, j, format, {{"bound", bound.str(), approx(bound)}});
            return 0;
        }
        if (*it) {
            IndexTwoReport r = index_two_report(it_n);
            Json j{{"command", "index-two"},
                   {"input", Json{{"n", it_n}}},
                   {"field", field_to_json(r.point_bound.field())},
                   {"report", index_two_to_json(r)}};
            std::vector<TableRow> table{
                {"sTail", r.s_tail.str(), approx(r.s_tail)},
                {"c1TailDeg", r.c1_tail_deg.str(), approx(r.c1_tail_deg)},
                {"curveBound", r.curve_bound.str(), approx(r.curve_bound)},
                {"etaBound", r.eta_bound.str(), approx(r.eta_bound)},
                {"pointBound", r.point_bound.str(), approx(r.point_bound)},
                {"allChecks",
                 (r.s_tail_ok && r.c1_tail_ok && r.curve_ok && r.point_ok) ? "true" : "false",
                 ""}};
            emit(out, j, format, table);
            return 0;
        }
        if (*os_) {
            auto weights = parse_rational_list(os_weights, "--weights");
            MonomialModel model = os_model == "p1" ? MonomialModel::p1(os_degree, weights)
                                                   : MonomialModel::p2(os_degree, weights);
            auto ms = parse_long_list(os_m, "--m");
            Json j{{"command", "oracle-sm"},
                   {"input", Json{{"model", os_model},
                                  {"degree", os_degree},
                                  {"weights", os_weights},
                                  {"m", os_m}}},
                   {"field", field_to_json(FieldDesc::rationals())}};
            std::vector<TableRow> table;
            if (ms.size() == 1) {
                Rational s = s_m(model, ms[0]);
                j["S_m"] = rational_to_string(s);
                table.push_back({"S_" + std::to_string(ms[0]), rational_to_string(s),
                                 approx(AlgNum(s))});
            } else {
                ConvergenceReport rep = s_convergence(model, ms, parse_flag_rational(os_tol, "--tol"));
                Json rows = Json::array();
                for (const auto& row : rep.rows) {
                    rows.push_back(Json{{"m", row.m},
                                        {"S_m", rational_to_string(row.s_m)},
                                        {"gap", rational_to_string(row.gap)}});
                    table.push_back({"S_" + std::to_string(row.m), rational_to_string(row.s_m),
                                     "gap " + rational_to_string(row.gap)});
                }
                j["rows"] = rows;
                j["closedForm"] = rational_to_string(rep.closed_form);
                j["tolerance"] = rational_to_string(rep.tolerance);
                j["pass"] = rep.pass;
                table.push_back({"limit", rational_to_string(rep.closed_form),
                                 rep.pass ? "pass" : "FAIL"});
            }
            emit(out, j, format, table);
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace kst
