// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "itelos/itelos.hpp"

namespace {

using namespace itelos;

struct GlobalOpts {
    std::string purpose;
    std::string workdir = ".";
    std::string base_uri = kDefaultBaseUri;
    std::string mappings;
    std::string ontologies_dir;
    std::string policy = "keep-first";
    std::string force_phase;
};

PipelineConfig make_config(const GlobalOpts& g) {
    PipelineConfig config;
    config.purpose_path = g.purpose;
    config.workdir = g.workdir;
    config.base_uri = g.base_uri;
    if (!g.mappings.empty()) config.mappings_path = g.mappings;
    if (!g.ontologies_dir.empty()) config.ontologies_dir = g.ontologies_dir;
    auto policy = merge_policy_from_string(g.policy);
    if (!policy) throw Error("unknown policy '" + g.policy + "'");
    config.policy = *policy;
    for (char c : g.force_phase) {
        switch (c) {
            case 'a': config.forced.insert(GatePhase::A_inception); break;
            case 'b': config.forced.insert(GatePhase::B_modeling); break;
            case 'c': config.forced.insert(GatePhase::C_alignment); break;
            case 'd': config.forced.insert(GatePhase::D_integration); break;
            case ',': break;
            default: throw Error("unknown phase in --force-phase; use a, b, c, d");
        }
    }
    return config;
}

std::optional<GatePhase> phase_from_string(const std::string& s) {
    if (s == "a") return GatePhase::A_inception;
    if (s == "b") return GatePhase::B_modeling;
    if (s == "c") return GatePhase::C_alignment;
    if (s == "d") return GatePhase::D_integration;
    return std::nullopt;
}

int gate_exit(const GateReport& report) {
    std::cout << gate_report_to_json(report).dump(2) << "\n";
    return report.pass ? 0 : 2;
}

int cmd_run(const GlobalOpts& g) { return run_pipeline(make_config(g)); }

int cmd_inception(const GlobalOpts& g, const std::string& out) {
    const PipelineConfig config = make_config(g);
    const Workspace ws = load_workspace(config);
    const InceptionOutcome outcome = phase_inception(ws);
    Json j;
    j["candidates"] = candidate_set_to_json(outcome.candidates);
    j["matches"] = Json::array();
    for (const auto& m : outcome.matches) j["matches"].push_back(match_to_json(m));
    j["gate"] = gate_report_to_json(outcome.gate);
    const PipelinePaths paths(config.workdir);
    const std::filesystem::path target = out.empty() ? paths.inception_json() : std::filesystem::path(out);
    write_file_atomic(target, j.dump(2) + "\n");
    write_file_atomic(paths.report(GatePhase::A_inception),
                      Json{{"gate", gate_report_to_json(outcome.gate)}}.dump(2) + "\n");
    return outcome.gate.pass ? 0 : 2;
}

int cmd_model(const GlobalOpts& g, const std::string& in, const std::string& out) {
    const PipelineConfig config = make_config(g);
    const Workspace ws = load_workspace(config);
    const PipelinePaths paths(config.workdir);
    const std::filesystem::path inception_path =
        in.empty() ? paths.inception_json() : std::filesystem::path(in);
    const Json j = detail::parse_json(read_file(inception_path), "inception.json");
    InceptionOutcome inception;
    inception.candidates = candidate_set_from_json(j.at("candidates"));
    for (const auto& jm : j.at("matches")) inception.matches.push_back(match_from_json(jm));

    const ModelOutcome outcome = phase_modeling(ws, inception);
    const std::filesystem::path target = out.empty() ? paths.etg_model() : std::filesystem::path(out);
    write_file_atomic(target, save_etg_json(outcome.model));
    Json report;
    report["decision"] = decision_to_json(outcome.decision);
    report["gate"] = gate_report_to_json(outcome.gate);
    write_file_atomic(paths.report(GatePhase::B_modeling), report.dump(2) + "\n");
    return outcome.gate.pass ? 0 : 2;
}

int cmd_align(const GlobalOpts& g, const std::string& model_path, const std::string& out) {
    const PipelineConfig config = make_config(g);
    const Workspace ws = load_workspace(config);
    const PipelinePaths paths(config.workdir);
    const Etg model =
        load_etg_json(read_file(model_path.empty() ? paths.etg_model() : std::filesystem::path(model_path)));
    const Json j = detail::parse_json(read_file(paths.inception_json()), "inception.json");
    std::vector<SchemaMatch> matches;
    for (const auto& jm : j.at("matches")) matches.push_back(match_from_json(jm));

    const AlignOutcome outcome = phase_alignment(ws, model, matches);
    write_file_atomic(out.empty() ? paths.etg_final() : std::filesystem::path(out),
                      save_etg_json(outcome.alignment.final_etg));
    write_file_atomic(paths.provenance(),
                      provenance_to_json(outcome.alignment.provenance).dump(2) + "\n");
    for (const auto& ds : outcome.cleaned) {
        std::vector<std::string> header;
        for (const auto& a : ds.schema.attributes) header.push_back(a.raw_name);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t r = 0; r < ds.rows.size(); ++r) {
            std::vector<std::string> row;
            for (const auto& a : ds.schema.attributes) row.push_back(ds.cell(r, a.raw_name));
            rows.push_back(std::move(row));
        }
        write_file_atomic(paths.cleaned_dir() / (ds.schema.dataset_id + ".csv"),
                          csv::write(header, rows));
    }
    Json report;
    report["ranking"] = ranking_to_json(outcome.ranking);
    report["adopted_fraction"] = outcome.alignment.adopted_fraction;
    report["warnings"] = Json(outcome.alignment.warnings);
    report["cleaning"] = Json::array();
    for (const auto& c : outcome.cleaning) report["cleaning"].push_back(cleaning_to_json(c));
    report["gate"] = gate_report_to_json(outcome.gate);
    write_file_atomic(paths.report(GatePhase::C_alignment), report.dump(2) + "\n");
    return outcome.gate.pass ? 0 : 2;
}

int cmd_integrate(const GlobalOpts& g, const std::string& etg_path, const std::string& out) {
    const PipelineConfig config = make_config(g);
    Workspace ws = load_workspace(config);
    const PipelinePaths paths(config.workdir);
    const Etg final_etg =
        load_etg_json(read_file(etg_path.empty() ? paths.etg_final() : std::filesystem::path(etg_path)));
    std::map<std::string, std::string> renames;
    if (std::filesystem::exists(paths.provenance())) {
        const Json jp = detail::parse_json(read_file(paths.provenance()), "provenance");
        for (const auto& [k, v] : jp.at("renames").items()) renames[k] = v.get<std::string>();
    }
    const std::vector<MappingSpec> mappings = remap_specs(ws.mappings, renames);

    // prefer the cleaned copies when the align phase produced them
    std::vector<Dataset> cleaned;
    for (const auto& spec : mappings) {
        bool have = false;
        for (const auto& c : cleaned)
            if (c.schema.dataset_id == spec.dataset_id) have = true;
        if (have) continue;
        const std::filesystem::path cleaned_path = paths.cleaned_dir() / (spec.dataset_id + ".csv");
        if (std::filesystem::exists(cleaned_path)) {
            AnnotationMap none;
            cleaned.push_back(load_dataset_csv(read_file(cleaned_path), none, spec.dataset_id,
                                               Category::Contextual));
        } else if (const Dataset* raw = ws.dataset(spec.dataset_id)) {
            cleaned.push_back(clean_dataset(*raw, final_etg, mappings).first);
        } else {
            throw Error("dataset '" + spec.dataset_id + "' is not declared in the purpose");
        }
    }
    const IntegrateOutcome outcome =
        phase_integration(ws, mappings, cleaned, final_etg, config.policy);
    write_file_atomic(out.empty() ? paths.eg_nt() : std::filesystem::path(out),
                      serialize_eg_ntriples(outcome.result.eg, config.base_uri));
    Json report;
    report["quality"] = quality_to_json(outcome.result.quality);
    report["rows_skipped"] = outcome.result.rows_skipped;
    report["links_pruned"] = outcome.result.links_pruned;
    report["cq_results"] = Json::array();
    for (const auto& r : outcome.cq_results) report["cq_results"].push_back(cq_result_to_json(r));
    report["gate"] = gate_report_to_json(outcome.gate);
    write_file_atomic(paths.report(GatePhase::D_integration), report.dump(2) + "\n");
    return outcome.gate.pass ? 0 : 2;
}

int cmd_eval(const GlobalOpts& g, const std::string& phase_str) {
    const PipelineConfig config = make_config(g);
    const auto phase = phase_from_string(phase_str);
    if (!phase) throw Error("unknown phase '" + phase_str + "'; use a, b, c or d");
    const Workspace ws = load_workspace(config);
    const PipelinePaths paths(config.workdir);
    return gate_exit(eval_phase(ws, paths, *phase, config.base_uri));
}

int cmd_validate(const std::string& etg_path, const std::string& eg_path,
                 const std::string& base_uri) {
    if (etg_path.empty()) throw Error("--etg is required");
    const Etg etg = load_etg_json(read_file(etg_path));  // throws listing violations
    ValidationReport report;
    if (!eg_path.empty()) {
        const Eg eg = parse_eg_ntriples(read_file(eg_path), etg, base_uri);
        report = validate_eg(eg);
    }
    if (report.empty()) {
        std::cout << "valid\n";
        return 0;
    }
    for (const auto& v : report)
        std::cout << "[" << v.rule << "] " << v.subject
                  << (v.property.empty() ? "" : "." + v.property) << ": " << v.message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"itelos: builds an entity graph from reusable datasets and reference schemas,\n"
                 "driven by a declared purpose and metric-gated phase evaluations"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--purpose", g.purpose, "purpose file (JSON)");
    app.add_option("--workdir", g.workdir, "working directory for artifacts");
    app.add_option("--base-uri", g.base_uri, "base URI prefix for the EG export");
    app.add_option("--mappings", g.mappings, "mapping specs (default: mappings.json beside the purpose)");
    app.add_option("--ontologies", g.ontologies_dir, "directory of reference ETG JSON files");
    app.add_option("--policy", g.policy, "merge policy: keep-first or keep-last");
    app.add_option("--force-phase", g.force_phase, "treat these gates as advisory, e.g. 'a' or 'a,c'");

    auto* run = app.add_subcommand("run", "run all four phases with gate checks");
    auto* inception = app.add_subcommand("inception", "phase 1: candidates and dataset matching");
    auto* model = app.add_subcommand("model", "phase 2: build the ETG model");
    auto* align = app.add_subcommand("align", "phase 3: ontology alignment and dataset cleaning");
    auto* integrate = app.add_subcommand("integrate", "phase 4: build and export the EG");
    auto* eval = app.add_subcommand("eval", "re-run one evaluation gate against the artifacts");
    auto* validate = app.add_subcommand("validate", "validate an ETG (and optionally an EG export)");

    std::string out, in_path, model_path, etg_path, phase_str, val_etg, val_eg;
    inception->add_option("--out", out, "output path for inception.json");
    model->add_option("--in", in_path, "inception.json path");
    model->add_option("--out", out, "output path for etg-model.json");
    align->add_option("--model", model_path, "etg-model.json path");
    align->add_option("--out", out, "output path for etg-final.json");
    integrate->add_option("--etg", etg_path, "etg-final.json path");
    integrate->add_option("--out", out, "output path for eg.nt");
    eval->add_option("--phase", phase_str, "gate to evaluate: a, b, c or d")->required();
    validate->add_option("--etg", val_etg, "ETG JSON file")->required();
    validate->add_option("--eg", val_eg, "EG N-Triples file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(g);
        if (inception->parsed()) return cmd_inception(g, out);
        if (model->parsed()) return cmd_model(g, in_path, out);
        if (align->parsed()) return cmd_align(g, model_path, out);
        if (integrate->parsed()) return cmd_integrate(g, etg_path, out);
        if (eval->parsed()) return cmd_eval(g, phase_str);
        if (validate->parsed()) return cmd_validate(val_etg, val_eg, g.base_uri);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
