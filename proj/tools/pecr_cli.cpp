#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pecr/bpa_io.hpp"
#include "pecr/fusion.hpp"
#include "pecr/isopignistic.hpp"
#include "pecr/mass.hpp"
#include "pecr/multiview.hpp"
#include "pecr/operators.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

using namespace pecr;

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

TriangularOperator parse_operator_or_exit(const std::string& spec) {
    try {
        return TriangularOperator::parse(spec);
    } catch (const std::exception& e) {
        std::cerr << "operator error: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

MassFunction load_bpa_or_exit(const std::string& path) {
    try {
        return bpa_from_json_file(path);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

// Applies one named rule to >= 2 inputs; binary baselines fold left.
MassFunction apply_rule(const std::string& spec, const std::vector<MassFunction>& inputs) {
    if (spec.rfind("pecr:", 0) == 0) {
        auto body = spec.substr(5);
        // the final ':'-separated field is the commitment operator; the rest
        // (which may itself contain ':' for parametric families) is the
        // propensity operator
        std::vector<std::string> parts;
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        std::string prop, comm;
        if (parts.size() == 2) {
            prop = parts[0];
            comm = parts[1];
        } else if (parts.size() == 3) {
            // pecr:frank:0.5:max
            prop = parts[0] + ":" + parts[1];
            comm = parts[2];
        } else if (parts.size() == 4) {
            prop = parts[0] + ":" + parts[1];
            comm = parts[2] + ":" + parts[3];
        } else {
            throw std::invalid_argument("cannot parse PECR spec '" + spec + "'");
        }
        FusionConfig cfg(TriangularOperator::parse(prop), TriangularOperator::parse(comm));
        return pecr::pecr(inputs, cfg).first;
    }
    auto fold = [&](auto&& rule) {
        MassFunction acc = rule(inputs[0], inputs[1]);
        for (std::size_t i = 2; i < inputs.size(); ++i) acc = rule(acc, inputs[i]);
        return acc;
    };
    if (spec == "ccr") return fold([](const auto& a, const auto& b) { return ccr(a, b); });
    if (spec == "dcr") return fold([](const auto& a, const auto& b) { return dcr(a, b); });
    if (spec == "dempster")
        return fold([](const auto& a, const auto& b) { return dempster(a, b); });
    if (spec == "yager") return fold([](const auto& a, const auto& b) { return yager(a, b); });
    if (spec == "dp")
        return fold([](const auto& a, const auto& b) { return dubois_prade(a, b); });
    if (spec == "caucr") return fold([](const auto& a, const auto& b) { return caucr(a, b); });
    if (spec == "bcr") return fold([](const auto& a, const auto& b) { return bcr(a, b); });
    throw std::invalid_argument("unknown rule '" + spec + "'");
}

void print_profile_rows(std::ostream& os, const Frame& frame, const std::string& name,
                        const std::vector<double>& per_subset, const std::string& format) {
    for (std::uint32_t f = 0; f < per_subset.size(); ++f) {
        const std::string key = frame.subset_name(f);
        if (format == "csv")
            os << name << "," << key << "," << num(per_subset[f]) << "\n";
        else
            os << "  " << name << "({" << key << "}) = " << num(per_subset[f]) << "\n";
    }
}

int cmd_decompose(const std::string& input, const std::string& format) {
    MassFunction m = load_bpa_or_exit(input);
    const Frame& frame = m.frame();
    const auto iso = decompose(m);
    const auto rel = relativize(iso);
    std::vector<double> bel_v(frame.subset_count()), pl_v(frame.subset_count()),
        q_v(frame.subset_count());
    for (std::uint32_t f = 0; f < frame.subset_count(); ++f) {
        bel_v[f] = bel(m, f);
        pl_v[f] = pl(m, f);
        q_v[f] = q(m, f);
    }
    if (format == "json") {
        nlohmann::json doc;
        auto table = [&](const std::vector<double>& v) {
            nlohmann::json o = nlohmann::json::object();
            for (std::uint32_t f = 0; f < v.size(); ++f) o[frame.subset_name(f)] = v[f];
            return o;
        };
        doc["frame"] = frame.labels();
        doc["m"] = table(m.masses());
        doc["bel"] = table(bel_v);
        doc["pl"] = table(pl_v);
        doc["q"] = table(q_v);
        doc["isopignistic"] = table(iso.values);
        doc["relative"] = table(rel.values);
        if (m.empty_mass() < 1.0 - 1e-12) {
            auto pd = betp(m);
            doc["betp_n"] = pd.p;
            doc["poss"] = possibility_from_pignistic(pd);
        }
        doc["layer_scales"] = rel.layer_scales;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::ostream& os = std::cout;
    if (format == "csv") os << "quantity,subset,value\n";
    print_profile_rows(os, frame, "m", m.masses(), format);
    print_profile_rows(os, frame, "Bel", bel_v, format);
    print_profile_rows(os, frame, "Pl", pl_v, format);
    print_profile_rows(os, frame, "q", q_v, format);
    if (m.empty_mass() < 1.0 - 1e-12) {
        auto pd = betp(m);
        auto poss = possibility_from_pignistic(pd);
        for (int i = 0; i < frame.size(); ++i) {
            const std::string lab = frame.labels()[static_cast<std::size_t>(i)];
            if (format == "csv") {
                os << "BetPN," << lab << "," << num(pd.p[static_cast<std::size_t>(i)]) << "\n";
                os << "Poss," << lab << "," << num(poss[static_cast<std::size_t>(i)]) << "\n";
            } else {
                os << "  BetPN(" << lab << ") = " << num(pd.p[static_cast<std::size_t>(i)])
                   << "  Poss(" << lab << ") = " << num(poss[static_cast<std::size_t>(i)]) << "\n";
            }
        }
    }
    print_profile_rows(os, frame, "I", iso.values, format);
    print_profile_rows(os, frame, "Irel", rel.values, format);
    for (std::size_t t = 0; t < rel.layer_scales.size(); ++t) {
        if (format == "csv")
            os << "s," << (t + 1) << "," << num(rel.layer_scales[t]) << "\n";
        else
            os << "  s(" << (t + 1) << ") = " << num(rel.layer_scales[t]) << "\n";
    }
    return 0;
}

void print_fused(const MassFunction& fused, const std::string& output) {
    const std::string text = bpa_to_json_string(fused);
    if (output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output);
        out << text << "\n";
    }
    std::cerr << "conflict e = " << num(fused.empty_mass()) << "\n";
    std::cerr << "Ign = " << num(ignorance(fused)) << "\n";
    if (fused.empty_mass() < 1.0 - 1e-12)
        std::cerr << "H(BetPN) = " << num(pignistic_entropy(fused)) << "\n";
}

int cmd_fuse(const std::vector<std::string>& files, const std::string& rule,
             const std::string& prop, const std::string& comm, const std::string& output) {
    std::vector<MassFunction> inputs;
    for (const auto& f : files) inputs.push_back(load_bpa_or_exit(f));
    std::string spec = rule;
    if (rule == "pecr") {
        parse_operator_or_exit(prop);
        parse_operator_or_exit(comm);
        spec = "pecr:" + prop + ":" + comm;
    }
    try {
        print_fused(apply_rule(spec, inputs), output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "rule precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}

int cmd_compare(const std::vector<std::string>& files, const std::vector<std::string>& rules,
                const std::string& format) {
    if (rules.empty()) {
        std::cerr << "usage error: --rules must list at least one rule\n";
        return kExitUsage;
    }
    std::vector<MassFunction> inputs;
    for (const auto& f : files) inputs.push_back(load_bpa_or_exit(f));
    nlohmann::json rows = nlohmann::json::array();
    if (format == "csv") std::cout << "rule,empty_mass,ignorance,entropy\n";
    for (const auto& rule : rules) {
        std::string err;
        std::optional<MassFunction> fused;
        try {
            fused = apply_rule(rule, inputs);
        } catch (const std::exception& e) {
            err = e.what();
        }
        if (format == "json") {
            nlohmann::json row;
            row["rule"] = rule;
            if (fused) {
                row["empty_mass"] = fused->empty_mass();
                row["ignorance"] = ignorance(*fused);
                row["entropy"] = fused->empty_mass() < 1.0 - 1e-12
                                     ? nlohmann::json(pignistic_entropy(*fused))
                                     : nlohmann::json();
            } else {
                row["error"] = err;
            }
            rows.push_back(row);
        } else if (fused) {
            const std::string h = fused->empty_mass() < 1.0 - 1e-12
                                      ? num(pignistic_entropy(*fused))
                                      : std::string("-");
            if (format == "csv")
                std::cout << rule << "," << num(fused->empty_mass()) << ","
                          << num(ignorance(*fused)) << "," << h << "\n";
            else
                std::cout << rule << "\tm(0)=" << num(fused->empty_mass())
                          << "\tIgn=" << num(ignorance(*fused)) << "\tH=" << h << "\n";
        } else {
            if (format == "csv")
                std::cout << rule << ",error,error," << err << "\n";
            else
                std::cout << rule << "\tfailed: " << err << "\n";
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_experiment(const std::string& dataset, const std::string& protocol_name,
                   const std::vector<std::string>& rule_specs, int folds, int repeats,
                   std::uint64_t seed, const std::string& output, bool serial) {
    namespace mv = pecr::multiview;
    try {
        const auto table = mv::load_csv(dataset);
        const auto protocol = mv::protocol_by_name(protocol_name);
        std::vector<mv::FusionRule> rules;
        for (const auto& spec : rule_specs) rules.push_back(mv::FusionRule::parse(spec));
        mv::CvOptions options;
        options.folds = folds;
        options.repeats = repeats;
        options.seed = seed;
        options.parallel = !serial;
        const auto reports = mv::run_cv(table, protocol, rules, options);
        std::ostringstream csv;
        csv << "rule,mean,std,wall_seconds";
        for (int i = 0; i < folds * repeats; ++i) csv << ",fold" << i;
        csv << "\n";
        for (const auto& rep : reports) {
            csv << rep.rule << "," << num(rep.mean) << "," << num(rep.stddev) << ","
                << num(rep.wall_seconds);
            for (double a : rep.fold_accuracies) csv << "," << num(a);
            csv << "\n";
            std::cout << rep.rule << ": " << num(rep.mean) << " +/- " << num(rep.stddev) << "\n";
        }
        if (!output.empty()) {
            std::ofstream out(output);
            out << csv.str();
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "experiment error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_sweep(const std::vector<std::string>& files, const std::string& family,
              const std::string& component, const std::string& grid, double fixed) {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    {
        std::stringstream ss(grid);
        std::string a, bpart, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, bpart, ':') ||
            !std::getline(ss, c, ':')) {
            std::cerr << "usage error: --grid expects a:b:steps\n";
            return kExitUsage;
        }
        try {
            lo = std::stod(a);
            hi = std::stod(bpart);
            steps = std::stoi(c);
        } catch (const std::exception&) {
            std::cerr << "usage error: cannot parse --grid '" << grid << "'\n";
            return kExitUsage;
        }
    }
    if (steps < 1 || hi < lo) {
        std::cerr << "usage error: invalid grid\n";
        return kExitUsage;
    }
    if (family != "frank" && family != "hamacher") {
        std::cerr << "usage error: --family must be frank or hamacher\n";
        return kExitUsage;
    }
    if (component != "propensity" && component != "commitment") {
        std::cerr << "usage error: --component must be propensity or commitment\n";
        return kExitUsage;
    }
    std::vector<MassFunction> inputs;
    for (const auto& f : files) inputs.push_back(load_bpa_or_exit(f));
    const Frame& frame = inputs.front().frame();
    const OpFamily fam = family == "frank" ? OpFamily::Frank : OpFamily::HamacherT;
    std::cout << "parameter";
    for (std::uint32_t f = 0; f < frame.subset_count(); ++f)
        std::cout << ",m(" << frame.subset_name(f) << ")";
    std::cout << "\n";
    for (int i = 0; i < steps; ++i) {
        const double v = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
        const auto varying = TriangularOperator::make(fam, v);
        const auto fixed_op = TriangularOperator::make(fam, fixed);
        FusionConfig cfg = component == "propensity" ? FusionConfig(varying, fixed_op)
                                                     : FusionConfig(fixed_op, varying);
        const auto fused = pecr::pecr(inputs, cfg).first;
        std::cout << num(v);
        for (std::uint32_t f = 0; f < frame.subset_count(); ++f)
            std::cout << "," << num(fused[f]);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Possibilistic evidence combination toolkit"};
    app.require_subcommand(1);

    std::string input, format = "table", output;
    auto* dec = app.add_subcommand("decompose",
                                   "Print all representations of a BPA document");
    dec->add_option("input", input, "BPA JSON file")->required();
    dec->add_option("--format", format, "json|csv|table");

    std::vector<std::string> files, rules;
    std::string rule = "pecr", prop = "product", comm = "max";
    auto* fuse = app.add_subcommand("fuse", "Combine two or more BPA documents");
    fuse->add_option("inputs", files, "BPA JSON files")->required()->expected(2, -1);
    fuse->add_option("--rule", rule, "pecr|ccr|dcr|dempster|yager|dp|caucr|bcr");
    fuse->add_option("--propensity", prop, "propensity operator (pecr only)");
    fuse->add_option("--commitment", comm, "commitment operator (pecr only)");
    fuse->add_option("--output", output, "write fused BPA JSON here instead of stdout");

    std::vector<std::string> cmp_files, cmp_rules;
    std::string cmp_format = "table";
    auto* cmp = app.add_subcommand("compare", "Tabulate conflict/uncertainty per rule");
    cmp->add_option("inputs", cmp_files, "BPA JSON files")->required()->expected(2, -1);
    cmp->add_option("--rules", cmp_rules,
                    "rules, e.g. ccr dcr pecr:product:max pecr:frank:0.5:max");
    cmp->add_option("--format", cmp_format, "json|csv|table");

    std::string dataset, protocol, exp_output;
    std::vector<std::string> exp_rules = {"frank", "hamacher", "min", "product",
                                          "ccr",   "caucr",    "majority"};
    int folds = 5, repeats = 5;
    std::uint64_t seed = 0;
    bool serial = false;
    auto* exp = app.add_subcommand("experiment", "Multi-view cross-validation run");
    exp->add_option("--dataset", dataset, "CSV dataset path")->required();
    exp->add_option("--protocol", protocol, "Wine-C1|D0-4-R6|D0-4-D4|D5-9-R2|BC-R4")->required();
    exp->add_option("--rules", exp_rules, "rule specs");
    exp->add_option("--folds", folds);
    exp->add_option("--repeats", repeats);
    exp->add_option("--seed", seed);
    exp->add_option("--output", exp_output, "write per-rule CSV report here");
    exp->add_flag("--serial", serial, "disable the parallel fold loop");

    std::vector<std::string> sweep_files;
    std::string family = "frank", component = "propensity", grid = "0.01:0.99:100";
    double fixed = 0.5;
    auto* sweep = app.add_subcommand("sweep", "Parameter sensitivity CSV");
    sweep->add_option("--inputs", sweep_files, "BPA JSON files")->required()->expected(2, -1);
    sweep->add_option("--family", family, "frank|hamacher");
    sweep->add_option("--component", component, "propensity|commitment");
    sweep->add_option("--grid", grid, "a:b:steps");
    sweep->add_option("--fixed", fixed, "parameter of the non-swept component");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (dec->parsed()) return cmd_decompose(input, format);
    if (fuse->parsed()) return cmd_fuse(files, rule, prop, comm, output);
    if (cmp->parsed()) return cmd_compare(cmp_files, cmp_rules, cmp_format);
    if (exp->parsed())
        return cmd_experiment(dataset, protocol, exp_rules, folds, repeats, seed, exp_output,
                              serial);
    if (sweep->parsed()) return cmd_sweep(sweep_files, family, component, grid, fixed);
    return kExitUsage;
}
