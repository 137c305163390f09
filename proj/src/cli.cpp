#include "hamdec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamdec/errors.hpp"
#include "hamdec/json_io.hpp"
#include "hamdec/jump_pairing.hpp"
#include "hamdec/lift_decomp.hpp"
#include "hamdec/product_decomp.hpp"

namespace hamdec {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitConstruction = 2;
constexpr int kExitNotFound = 3;

int exit_code_for(Err code) {
    switch (code) {
        case Err::ConstructionFailed:
        case Err::Internal:
            return kExitConstruction;
        default:
            return kExitInvalid;
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::InvalidSpec, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::vector<int> parse_jumps(const std::string& csv) {
    std::vector<int> jumps;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        jumps.push_back(std::stoi(item));
    }
    return jumps;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamilton cycle decompositions of circulants and tensor products"};
    app.require_subcommand(1);

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "pair odd and even jumps (property Q)");
    int pair_n = 0;
    std::string pair_jumps;
    pair_cmd->add_option("--n", pair_n, "circulant order")->required();
    pair_cmd->add_option("--jumps", pair_jumps, "comma-separated jump list")->required();

    // decompose4
    auto* dec_cmd = app.add_subcommand("decompose4", "decompose a 4-regular circulant");
    int dec_n = 0, dec_a = 0, dec_b = 0;
    bool dec_trace = false;
    dec_cmd->add_option("--n", dec_n, "order")->required();
    dec_cmd->add_option("--a", dec_a, "first jump")->required();
    dec_cmd->add_option("--b", dec_b, "second jump")->required();
    dec_cmd->add_flag("--trace", dec_trace, "include the pipeline trace");

    // product
    auto* prod_cmd = app.add_subcommand("product", "decompose a tensor product G x H");
    prod_cmd->set_help_flag("--help", "print help"); // frees --h for the H factor
    std::string prod_g, prod_h, prod_hc;
    prod_cmd->add_option("--g", prod_g, "G graph JSON file")->required();
    prod_cmd->add_option("--h", prod_h, "H graph JSON file")->required();
    prod_cmd->add_option("--h-cycles", prod_hc, "H Hamilton cycles JSON file");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "verify a decomposition");
    std::string ver_graph, ver_decomp;
    bool ver_gamma = false;
    ver_cmd->add_option("--graph", ver_graph, "graph JSON file")->required();
    ver_cmd->add_option("--decomp", ver_decomp, "decomposition JSON file")->required();
    ver_cmd->add_flag("--gamma", ver_gamma, "also check Q1 on a gamma graph");

    // oracle
    auto* ora_cmd = app.add_subcommand("oracle", "brute-force decomposition search");
    std::string ora_graph;
    bool ora_q2 = false;
    ora_cmd->add_option("--graph", ora_graph, "graph JSON file")->required();
    ora_cmd->add_flag("--q2", ora_q2, "require an odd alternating 4-cycle");

    // export
    auto* exp_cmd = app.add_subcommand("export", "render a graph");
    std::string exp_graph, exp_format;
    exp_cmd->add_option("--graph", exp_graph, "graph JSON file")->required();
    exp_cmd->add_option("--format", exp_format, "dot, edgelist or labelmap")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*pair_cmd) {
            CirculantSpec spec{pair_n, parse_jumps(pair_jumps)};
            std::sort(spec.jumps.begin(), spec.jumps.end());
            print(out, to_json(check_property_q(spec)));
            return kExitOk;
        }
        if (*dec_cmd) {
            auto res = decompose_4regular(dec_n, dec_a, dec_b);
            json j{{"n", dec_n},
                   {"a", dec_a},
                   {"b", dec_b},
                   {"gamma",
                    {{"alpha", res.gamma.alpha}, {"k", res.gamma.k}, {"c", res.gamma.c}}},
                   {"cycles", res.decomp.cycles},
                   {"certificate", to_json(res.cert)}};
            if (dec_trace) {
                json steps = json::array();
                for (const auto& step : res.trace) {
                    json s{{"op", step.op},
                           {"alpha", step.shape.alpha},
                           {"beta", step.shape.beta()},
                           {"k", step.shape.k},
                           {"c", step.shape.c}};
                    if (!step.note.empty()) s["note"] = step.note;
                    steps.push_back(s);
                }
                j["trace"] = steps;
            }
            print(out, j);
            return kExitOk;
        }
        if (*prod_cmd) {
            auto gin = load_graph(read_json_file(prod_g));
            if (!gin.circulant) fail(Err::InvalidSpec, "--g must be a circulant spec");
            auto hin = load_graph(read_json_file(prod_h));
            HamiltonCycleSet hc;
            if (!prod_hc.empty()) {
                json j = read_json_file(prod_hc);
                hc.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
                if (j.contains("multiplicities"))
                    hc.multiplicity = j.at("multiplicities").get<std::vector<int>>();
            } else {
                if (hin.graph.vertex_count() > 16)
                    fail(Err::InvalidSpec, "--h-cycles required for |V(H)| > 16");
                auto found = brute_force_decomposition(hin.graph);
                if (!found) {
                    err << "H has no Hamilton decomposition\n";
                    return kExitNotFound;
                }
                hc.cycles = found->cycles;
            }
            auto pd = decompose_product(*gin.circulant, hin.graph, hc);
            print(out, to_json(pd));
            return kExitOk;
        }
        if (*ver_cmd) {
            auto gin = load_graph(read_json_file(ver_graph));
            auto d = decomposition_from_json(read_json_file(ver_decomp));
            auto rep = verify_hamilton_decomposition(gin.graph, d);
            if (ver_gamma) {
                if (!gin.gamma) fail(Err::InvalidSpec, "--gamma needs a gamma graph input");
                if (rep.ok && !verify_q1(*gin.gamma, d))
                    rep.add("Q1Violation", "a matching class is missed by one cycle");
            }
            print(out, to_json(rep));
            return rep.ok ? kExitOk : kExitInvalid;
        }
        if (*ora_cmd) {
            auto gin = load_graph(read_json_file(ora_graph));
            OracleConstraints cons;
            cons.q2_required = ora_q2;
            if (gin.gamma) cons.q1_on = gin.gamma;
            auto found = brute_force_decomposition(gin.graph, cons);
            if (!found) {
                print(out, json{{"found", false}});
                return kExitNotFound;
            }
            json j = to_json(*found);
            j["found"] = true;
            print(out, j);
            return kExitOk;
        }
        if (*exp_cmd) {
            auto gin = load_graph(read_json_file(exp_graph));
            if (exp_format == "dot") {
                out << export_dot(gin);
            } else if (exp_format == "edgelist") {
                out << export_edgelist(gin.graph);
            } else if (exp_format == "labelmap") {
                // CSV dump of the gamma labeling of a two-jump circulant
                if (!gin.circulant || gin.circulant->jumps.size() != 2)
                    fail(Err::InvalidSpec, "labelmap needs a circulant with two jumps");
                auto [gg, map] =
                    to_gamma(gin.circulant->n, gin.circulant->jumps[0], gin.circulant->jumps[1]);
                out << "group_element,i,j\n";
                for (int x = 0; x < map.n; ++x) {
                    auto [i, j] = gg.coords(map.gamma_of[x]);
                    out << x << "," << i << "," << j << "\n";
                }
            } else {
                fail(Err::InvalidSpec, "format must be dot, edgelist or labelmap");
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }
    err << "no subcommand\n";
    return kExitInvalid;
}

} // namespace hamdec
