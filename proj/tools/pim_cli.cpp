// Command-line front end: exact special values of standard, Hecke-product and
// lifted-form L-functions, and the end-to-end period-identity verifier.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pim/e8.hpp"
#include "pim/eisenstein.hpp"
#include "pim/json_io.hpp"
#include "pim/numtheory.hpp"
#include "pim/siegel_series.hpp"
#include "pim/verifier.hpp"

using namespace pim;

namespace {

Json parse_matrix_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot open matrix file " + arg.substr(1));
        return Json::parse(in);
    }
    return Json::parse(arg);
}

Json load_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open data file " + path);
    return Json::parse(in);
}

const char* step_name(SiegelPoly::Step s) {
    switch (s) {
        case SiegelPoly::Step::trivial: return "trivial";
        case SiegelPoly::Step::functional_eq: return "functional_eq";
        case SiegelPoly::Step::stratum1: return "stratum1";
        case SiegelPoly::Step::stratum2: return "stratum2";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact L-value engine for lifted Siegel eigenforms"};
    app.require_subcommand(1);

    std::string data_path = PIM_DEFAULT_DATA;
    bool allow_unverified = false;
    app.add_option("--data", data_path, "curated-constants JSON file");
    app.add_flag("--allow-unverified", allow_unverified,
                 "accept curated overrides without provenance");

    // verify
    auto* verify = app.add_subcommand("verify", "run a full period-identity case");
    std::string case_label = "k10", embedding = "plus", report_path, markdown_path;
    verify->add_option("--case", case_label, "k10 or k14")->required();
    verify->add_option("--embedding", embedding, "plus, minus or both");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_option("--markdown", markdown_path, "write the markdown report here");

    // compute group
    auto* compute = app.add_subcommand("compute", "exact building blocks");
    compute->require_subcommand(1);

    auto* fp_cmd = compute->add_subcommand("fp", "local Siegel series polynomial F_p");
    std::string fp_matrix;
    long fp_p = 2;
    fp_cmd->add_option("--matrix", fp_matrix, "2B as a JSON integer matrix (or @file)")->required();
    fp_cmd->add_option("--p", fp_p, "prime")->required();

    auto* eis_cmd = compute->add_subcommand("eisenstein", "Fourier coefficient of E*_{2n,l}");
    std::string eis_matrix;
    int eis_genus = 6, eis_weight = 10;
    eis_cmd->add_option("--genus", eis_genus)->required();
    eis_cmd->add_option("--weight", eis_weight)->required();
    eis_cmd->add_option("--matrix", eis_matrix)->required();

    auto* miy_cmd = compute->add_subcommand("miyawaki", "restricted-lift Fourier coefficient");
    std::string miy_case = "k10", miy_matrix, miy_embedding = "plus";
    miy_cmd->add_option("--case", miy_case)->required();
    miy_cmd->add_option("--matrix", miy_matrix, "3x3 target (2B); defaults to the case matrix");
    miy_cmd->add_option("--embedding", miy_embedding);

    auto* std_cmd = compute->add_subcommand("stdL", "|c(A)|^2 L_alg(k-3, F, St) via pullback");
    std::string std_case = "k14", std_embedding = "plus";
    std_cmd->add_option("--case", std_case)->required();
    std_cmd->add_option("--embedding", std_embedding);

    auto* hp_cmd = compute->add_subcommand("heckeprod", "L_alg(l1,l2;f) from the bracket");
    int hp_l1 = 25, hp_l2 = 14, hp_weight = 28;
    std::string hp_embedding = "plus";
    hp_cmd->add_option("--l1", hp_l1)->required();
    hp_cmd->add_option("--l2", hp_l2)->required();
    hp_cmd->add_option("--weight", hp_weight)->required();
    hp_cmd->add_option("--embedding", hp_embedding);

    auto* ef_cmd = compute->add_subcommand("eigenform", "q-expansions of the S_k eigenbasis");
    int ef_weight = 28, ef_prec = 24;
    ef_cmd->add_option("--weight", ef_weight)->required();
    ef_cmd->add_option("--prec", ef_prec);

    // oracle group
    auto* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    oracle->require_subcommand(1);

    auto* e8_cmd = oracle->add_subcommand("e8", "E8 representation numbers");
    std::string e8_matrix;
    int e8_n = 1;
    e8_cmd->add_option("--matrix", e8_matrix)->required();
    e8_cmd->add_option("--n", e8_n);

    auto* bs_cmd = oracle->add_subcommand("brute-siegel", "[X^j] b_p by enumeration");
    std::string bs_matrix;
    long bs_p = 2;
    int bs_level = 2;
    bs_cmd->add_option("--matrix", bs_matrix)->required();
    bs_cmd->add_option("--p", bs_p)->required();
    bs_cmd->add_option("--level", bs_level);

    auto* sg_cmd = oracle->add_subcommand("sigma", "divisor power sum");
    int sg_e = 7;
    long sg_m = 12;
    sg_cmd->add_option("--e", sg_e)->required();
    sg_cmd->add_option("--m", sg_m)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            Json root = load_data(data_path);
            CaseConfig cfg = load_case(root, case_label, allow_unverified);
            bool all_pass = true;
            std::vector<int> embeddings;
            if (embedding == "both")
                embeddings = {+1, -1};
            else
                embeddings = {embedding == "minus" ? -1 : +1};
            Json reports = Json::array();
            for (int emb : embeddings) {
                AssembleOptions opt;
                opt.embedding = emb;
                auto [C, rep] = assemble_C(cfg, opt);
                all_pass &= rep.pass;
                std::cout << rep.to_markdown() << "\n";
                reports.push_back(rep.to_json());
                if (!markdown_path.empty()) {
                    std::ofstream out(markdown_path, emb == embeddings.front()
                                                         ? std::ios::trunc
                                                         : std::ios::app);
                    out << rep.to_markdown() << "\n";
                }
            }
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
            }
            return all_pass ? 0 : 1;
        }

        if (*fp_cmd) {
            HalfIntMat B = halfint_from_json(parse_matrix_arg(fp_matrix));
            SiegelPoly F = fp_polynomial(B, fp_p);
            Json out;
            out["p"] = F.p;
            out["kernel_size"] = F.m;
            Json coeffs = Json::array(), steps = Json::array();
            for (size_t i = 0; i < F.c.size(); ++i) {
                coeffs.push_back(F.c[i].get_str());
                steps.push_back(step_name(F.derivation[i]));
            }
            out["coefficients"] = coeffs;
            out["derivation"] = steps;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*eis_cmd) {
            HalfIntMat B = halfint_from_json(parse_matrix_arg(eis_matrix));
            if (B.size() != eis_genus) throw Error("matrix size does not match --genus");
            std::cout << Rat(fc_even_genus(B, eis_weight)).get_str() << "\n";
            return 0;
        }
        if (*miy_cmd || *std_cmd) {
            Json root = load_data(data_path);
            CaseConfig cfg = load_case(root, *miy_cmd ? miy_case : std_case, allow_unverified);
            int emb = (*miy_cmd ? miy_embedding : std_embedding) == "minus" ? -1 : +1;
            auto pairs = plus_space_eigenforms(cfg.k, cfg.plus_precision);
            size_t which = emb >= 0 ? 0 : pairs.size() - 1;
            LiftContext ctx(cfg.k, pairs[which].first, pairs[which].second);
            if (*miy_cmd) {
                HalfIntMat A = miy_matrix.empty() ? cfg.A
                                                  : halfint_from_json(parse_matrix_arg(miy_matrix));
                std::cout << miyawaki_fc(A, ctx).str() << "\n";
                return 0;
            }
            BasisTable table;
            if (cfg.table)
                table = emb >= 0 ? *cfg.table : cfg.table->galois_conj();
            else {
                table.Ai = {cfg.A};
                table.a = {{miyawaki_fc(cfg.A, ctx)}};
            }
            std::cout << extract_std_L(cfg.k, table).str() << "\n";
            return 0;
        }
        if (*hp_cmd) {
            auto eig = eigenforms(hp_weight, 200);
            if (eig.empty()) throw Error("S_k is trivial at this weight");
            size_t which = (hp_embedding == "minus" && eig.size() > 1) ? 1 : 0;
            std::cout << product_hecke_L(hp_l1, hp_l2, eig[which]).str() << "\n";
            return 0;
        }
        if (*ef_cmd) {
            Json out = Json::array();
            for (const auto& f : eigenforms(ef_weight, ef_prec)) {
                Json fj;
                fj["weight"] = f.weight;
                fj["field"] = f.field_d == 0 ? "Q" : "Q(sqrt(" + std::to_string(f.field_d) + "))";
                fj["coefficients"] = qseries_to_json(f.q);
                out.push_back(std::move(fj));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*e8_cmd) {
            HalfIntMat T = halfint_from_json(parse_matrix_arg(e8_matrix));
            std::cout << e8_pair_count(T, e8_n).get_str() << "\n";
            return 0;
        }
        if (*bs_cmd) {
            HalfIntMat B = halfint_from_json(parse_matrix_arg(bs_matrix));
            Json out = Json::array();
            for (const auto& c : brute_bp(B, bs_p, bs_level)) out.push_back(c.get_str());
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*sg_cmd) {
            std::cout << sigma(static_cast<unsigned>(sg_e), sg_m).get_str() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
