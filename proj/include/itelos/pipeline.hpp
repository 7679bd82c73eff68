// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itelos/alignment.hpp"
#include "itelos/etg_json.hpp"
#include "itelos/gates.hpp"
#include "itelos/integration.hpp"
#include "itelos/modeling.hpp"
#include "itelos/ntriples.hpp"
#include "itelos/reports.hpp"

namespace itelos {

namespace fs = std::filesystem;

inline void log(const char* level, const std::string& msg) {
    const char* want = std::getenv("ITELOS_LOG");
    if (!want) return;
    const std::string w(want);
    if (w == "debug" || (w == "info" && std::string(level) != "debug"))
        std::fprintf(stderr, "[%s] %s\n", level, msg.c_str());
}

struct PipelineConfig {
    fs::path purpose_path;
    fs::path workdir = ".";
    std::string base_uri = kDefaultBaseUri;
    std::optional<fs::path> mappings_path;   // default: mappings.json beside the purpose
    std::optional<fs::path> ontologies_dir;  // overrides the purpose's ontology refs
    MergePolicy policy = MergePolicy::KeepFirst;
    std::set<GatePhase> forced;  // gates treated as advisory
};

/// Fixed workdir layout, one directory per phase with the phase artifact and
/// its report side by side.
struct PipelinePaths {
    fs::path root;
    explicit PipelinePaths(const fs::path& workdir) : root(workdir / "out") {}

    fs::path inception_dir() const { return root / "inception"; }
    fs::path model_dir() const { return root / "model"; }
    fs::path align_dir() const { return root / "align"; }
    fs::path integrate_dir() const { return root / "integrate"; }

    fs::path inception_json() const { return inception_dir() / "inception.json"; }
    fs::path etg_model() const { return model_dir() / "etg-model.json"; }
    fs::path etg_final() const { return align_dir() / "etg-final.json"; }
    fs::path provenance() const { return align_dir() / "provenance.json"; }
    fs::path cleaned_dir() const { return align_dir() / "cleaned"; }
    fs::path eg_nt() const { return integrate_dir() / "eg.nt"; }
    fs::path state() const { return root / "state.json"; }

    fs::path report(GatePhase p) const {
        switch (p) {
            case GatePhase::A_inception: return inception_dir() / "report.json";
            case GatePhase::B_modeling: return model_dir() / "report.json";
            case GatePhase::C_alignment: return align_dir() / "report.json";
            case GatePhase::D_integration: return integrate_dir() / "report.json";
        }
        return root / "report.json";
    }
};

struct Workspace {
    Purpose purpose;
    fs::path purpose_dir;
    std::vector<Dataset> datasets;  // purpose declaration order
    std::vector<Etg> ontologies;
    std::vector<MappingSpec> mappings;

    std::vector<DatasetSchema> schemas() const {
        std::vector<DatasetSchema> out;
        for (const auto& d : datasets) out.push_back(d.schema);
        return out;
    }
    const Dataset* dataset(const std::string& id) const {
        for (const auto& d : datasets)
            if (d.schema.dataset_id == id) return &d;
        return nullptr;
    }
};

inline std::string dataset_id_of(const fs::path& csv_path) {
    return csv_path.stem().string();
}

inline fs::path annotations_path_of(const fs::path& csv_path) {
    fs::path p = csv_path;
    p.replace_extension(".annotations.json");
    return p;
}

/// Loads the purpose plus every referenced dataset, sidecar, ontology and
/// the mapping plan. Paths resolve relative to the purpose file.
inline Workspace load_workspace(const PipelineConfig& config) {
    Workspace ws;
    ws.purpose = parse_purpose(read_file(config.purpose_path));
    ws.purpose_dir = config.purpose_path.parent_path();

    for (const auto& ref : ws.purpose.dataset_refs) {
        const fs::path csv_path = ws.purpose_dir / ref;
        const fs::path ann_path = annotations_path_of(csv_path);
        AnnotationMap annotations;
        if (fs::exists(ann_path))
            annotations = parse_annotations(read_file(ann_path), ann_path.filename().string());
        ws.datasets.push_back(
            load_dataset_csv(read_file(csv_path), annotations, dataset_id_of(csv_path)));
        log("info", "loaded dataset " + dataset_id_of(csv_path) + " (" +
                        std::to_string(ws.datasets.back().rows.size()) + " rows)");
    }

    if (config.ontologies_dir) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(*config.ontologies_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            ws.ontologies.push_back(load_etg_json(read_file(f), f.stem().string()));
    } else {
        for (const auto& ref : ws.purpose.ontology_refs) {
            const fs::path p = ws.purpose_dir / ref;
            ws.ontologies.push_back(load_etg_json(read_file(p), p.stem().string()));
        }
    }

    const fs::path mappings_path =
        config.mappings_path ? *config.mappings_path : ws.purpose_dir / "mappings.json";
    if (fs::exists(mappings_path)) ws.mappings = load_mappings_json(read_file(mappings_path));
    return ws;
}

struct InceptionOutcome {
    CandidateSet candidates;
    std::vector<SchemaMatch> matches;
    GateReport gate;
};

inline InceptionOutcome phase_inception(const Workspace& ws) {
    InceptionOutcome out;
    out.candidates = collect_candidates(ws.purpose.cqs, ws.purpose.display_names);
    for (const auto& ds : ws.datasets)
        out.matches.push_back(
            match_schema(ds.schema, out.candidates, ws.purpose.thresholds.etr_match));
    GateInputs in;
    in.candidates = out.candidates;
    in.matches = out.matches;
    out.gate = run_gate(GatePhase::A_inception, in, ws.purpose.thresholds);
    return out;
}

struct ModelOutcome {
    Etg model;
    ModelingDecision decision;
    GateReport gate;
};

inline ModelOutcome phase_modeling(const Workspace& ws, const InceptionOutcome& inception) {
    ModelOutcome out;
    auto [etg, decision] = build_etg_model(inception.candidates, inception.matches, ws.schemas(),
                                           ws.purpose.cqs, ws.purpose.thresholds,
                                           ws.purpose.relations);
    out.model = std::move(etg);
    out.decision = std::move(decision);
    GateInputs in;
    in.candidates = inception.candidates;
    in.model_etypes = ElementSet::etypes(out.model.etype_ids());
    in.model_properties = ElementSet::properties(out.model.property_names());
    out.gate = run_gate(GatePhase::B_modeling, in, ws.purpose.thresholds);
    return out;
}

struct AlignOutcome {
    std::vector<OntologyScore> ranking;
    AlignmentOutcome alignment;
    std::vector<MappingSpec> mappings;  // rewritten through the rename map
    std::vector<Dataset> cleaned;
    std::vector<CleaningReport> cleaning;
    GateReport gate;
};

inline std::vector<OntologyElements> ontology_elements(const std::vector<Etg>& ontologies) {
    std::vector<OntologyElements> out;
    for (const auto& o : ontologies)
        out.push_back({o.name, ElementSet::etypes(o.etype_ids()),
                       ElementSet::properties(o.property_names())});
    return out;
}

inline AlignOutcome phase_alignment(const Workspace& ws, const Etg& model,
                                    const std::vector<SchemaMatch>& matches) {
    AlignOutcome out;
    out.ranking = rank_ontologies(model, ws.ontologies, ws.purpose.etr_weights,
                                  ws.purpose.thresholds.etr_match);
    out.alignment = generate_final_etg(model, out.ranking, ws.ontologies, matches,
                                       ws.purpose.thresholds.etr_match,
                                       ws.purpose.keep_model_terminology);
    out.mappings = remap_specs(ws.mappings, out.alignment.provenance.renames);
    for (const auto& ds : ws.datasets) {
        bool mapped = false;
        for (const auto& spec : out.mappings)
            if (spec.dataset_id == ds.schema.dataset_id) mapped = true;
        if (!mapped) continue;
        auto [cleaned, report] = clean_dataset(ds, out.alignment.final_etg, out.mappings);
        out.cleaned.push_back(std::move(cleaned));
        out.cleaning.push_back(std::move(report));
    }
    GateInputs in;
    in.final_etypes = ElementSet::etypes(out.alignment.final_etg.etype_ids());
    in.final_properties = ElementSet::properties(out.alignment.final_etg.property_names());
    in.ontologies = ontology_elements(ws.ontologies);
    in.dataset_compliance = true;  // generate_final_etg fails loudly otherwise
    out.gate = run_gate(GatePhase::C_alignment, in, ws.purpose.thresholds);
    return out;
}

struct IntegrateOutcome {
    IntegrationResult result;
    std::vector<CqResult> cq_results;
    GateReport gate;
};

inline Ratio answerable_fraction(const std::vector<CqResult>& results,
                                 const std::vector<CompetencyQuery>& cqs,
                                 std::optional<Category> only) {
    std::int64_t total = 0, answerable = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (only && cqs[i].category != *only) continue;
        ++total;
        if (results[i].answerable) ++answerable;
    }
    if (total == 0) return Ratio::one();
    return Ratio{answerable, total};
}

inline IntegrateOutcome phase_integration(const Workspace& ws,
                                          const std::vector<MappingSpec>& mappings,
                                          const std::vector<Dataset>& cleaned, const Etg& final_etg,
                                          MergePolicy policy) {
    if (mappings.empty()) throw Error("integration requires a mappings file");
    IntegrateOutcome out;
    std::vector<std::pair<const Dataset*, MappingSpec>> inputs;
    for (const auto& spec : mappings) {
        const Dataset* ds = nullptr;
        for (const auto& c : cleaned)
            if (c.schema.dataset_id == spec.dataset_id) ds = &c;
        if (!ds)
            throw Error("mappings reference dataset '" + spec.dataset_id +
                        "' which is not among the cleaned datasets");
        inputs.emplace_back(ds, spec);
    }
    out.result = integrate(final_etg, inputs, policy);
    for (const auto& cq : ws.purpose.cqs) out.cq_results.push_back(execute_cq(out.result.eg, cq));
    GateInputs in;
    in.answerable_core = answerable_fraction(out.cq_results, ws.purpose.cqs, Category::Core);
    in.answerable_all = answerable_fraction(out.cq_results, ws.purpose.cqs, std::nullopt);
    out.gate = run_gate(GatePhase::D_integration, in, ws.purpose.thresholds);
    return out;
}

/// Cursor, artifact paths and the append-only gate history of one run.
struct PipelineState {
    std::vector<GateReport> gate_history;
    std::map<std::string, std::string> artifacts;

    Json to_json() const {
        Json j;
        j["phases_attempted"] = gate_history.size();
        j["artifacts"] = Json(artifacts);
        j["gate_history"] = Json::array();
        for (const auto& g : gate_history) j["gate_history"].push_back(gate_report_to_json(g));
        return j;
    }
};

/// Runs Inception, Modeling, Knowledge Alignment and Data Integration in
/// order, each ending with its gate. A failed gate halts the run with exit
/// code 2 and the backtrack target in the phase report; forced phases record
/// the failure and continue. Exit 0 on success, 1 on errors.
inline int run_pipeline(const PipelineConfig& config) {
    const PipelinePaths paths(config.workdir);
    const Workspace ws = load_workspace(config);
    PipelineState state;

    auto finish_gate = [&](const GateReport& gate, const Json& report_body) -> bool {
        state.gate_history.push_back(gate);
        Json body = report_body;
        body["gate"] = gate_report_to_json(gate);
        write_file_atomic(paths.report(gate.phase), body.dump(2) + "\n");
        write_file_atomic(paths.state(), state.to_json().dump(2) + "\n");
        if (gate.pass || config.forced.count(gate.phase)) return true;
        std::fprintf(stderr, "gate %s failed; backtrack to: %s\n", to_string(gate.phase),
                     gate.backtrack_to.c_str());
        return false;
    };

    // Phase 1: Inception
    log("info", "phase: inception");
    const InceptionOutcome inception = phase_inception(ws);
    Json inception_json;
    inception_json["candidates"] = candidate_set_to_json(inception.candidates);
    inception_json["matches"] = Json::array();
    for (const auto& m : inception.matches) inception_json["matches"].push_back(match_to_json(m));
    inception_json["gate"] = gate_report_to_json(inception.gate);
    write_file_atomic(paths.inception_json(), inception_json.dump(2) + "\n");
    state.artifacts["inception"] = paths.inception_json().string();
    if (!finish_gate(inception.gate, Json::object())) return 2;

    // Phase 2: Modeling
    log("info", "phase: modeling");
    const ModelOutcome model = phase_modeling(ws, inception);
    write_file_atomic(paths.etg_model(), save_etg_json(model.model));
    state.artifacts["etg_model"] = paths.etg_model().string();
    Json model_report;
    model_report["decision"] = decision_to_json(model.decision);
    if (!finish_gate(model.gate, model_report)) return 2;

    // Phase 3: Knowledge Alignment
    log("info", "phase: alignment");
    const AlignOutcome align = phase_alignment(ws, model.model, inception.matches);
    write_file_atomic(paths.etg_final(), save_etg_json(align.alignment.final_etg));
    write_file_atomic(paths.provenance(),
                      provenance_to_json(align.alignment.provenance).dump(2) + "\n");
    for (std::size_t i = 0; i < align.cleaned.size(); ++i) {
        const Dataset& ds = align.cleaned[i];
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
    state.artifacts["etg_final"] = paths.etg_final().string();
    Json align_report;
    align_report["ranking"] = ranking_to_json(align.ranking);
    align_report["adopted_fraction"] = align.alignment.adopted_fraction;
    align_report["warnings"] = Json(align.alignment.warnings);
    align_report["cleaning"] = Json::array();
    for (const auto& c : align.cleaning) align_report["cleaning"].push_back(cleaning_to_json(c));
    if (!finish_gate(align.gate, align_report)) return 2;

    // Phase 4: Data Integration
    log("info", "phase: integration");
    const IntegrateOutcome integ = phase_integration(ws, align.mappings, align.cleaned,
                                                     align.alignment.final_etg, config.policy);
    write_file_atomic(paths.eg_nt(), serialize_eg_ntriples(integ.result.eg, config.base_uri));
    state.artifacts["eg"] = paths.eg_nt().string();
    Json integrate_report;
    integrate_report["quality"] = quality_to_json(integ.result.quality);
    integrate_report["rows_skipped"] = integ.result.rows_skipped;
    integrate_report["links_pruned"] = integ.result.links_pruned;
    integrate_report["cq_results"] = Json::array();
    for (const auto& r : integ.cq_results)
        integrate_report["cq_results"].push_back(cq_result_to_json(r));
    if (!finish_gate(integ.gate, integrate_report)) return 2;

    log("info", "pipeline complete: " + paths.eg_nt().string());
    return 0;
}

/// Recomputes one gate from the artifacts in the workdir, so hand edits are
/// honored. Exit 0 pass, 2 gate-fail, 1 error.
inline GateReport eval_phase(const Workspace& ws, const PipelinePaths& paths, GatePhase phase,
                             const std::string& base_uri = kDefaultBaseUri) {
    GateInputs in;
    auto load_inception = [&] {
        const Json j = detail::parse_json(read_file(paths.inception_json()), "inception.json");
        in.candidates = candidate_set_from_json(j.at("candidates"));
        std::vector<SchemaMatch> matches;
        for (const auto& jm : j.at("matches")) matches.push_back(match_from_json(jm));
        in.matches = std::move(matches);
    };
    switch (phase) {
        case GatePhase::A_inception:
            load_inception();
            break;
        case GatePhase::B_modeling: {
            load_inception();
            const Etg model = load_etg_json(read_file(paths.etg_model()));
            in.model_etypes = ElementSet::etypes(model.etype_ids());
            in.model_properties = ElementSet::properties(model.property_names());
            break;
        }
        case GatePhase::C_alignment: {
            load_inception();
            const Etg final_etg = load_etg_json(read_file(paths.etg_final()));
            in.final_etypes = ElementSet::etypes(final_etg.etype_ids());
            in.final_properties = ElementSet::properties(final_etg.property_names());
            in.ontologies = ontology_elements(ws.ontologies);
            std::map<std::string, std::string> renames;
            if (fs::exists(paths.provenance())) {
                const Json j = detail::parse_json(read_file(paths.provenance()), "provenance");
                for (const auto& [k, v] : j.at("renames").items())
                    renames[k] = v.get<std::string>();
            }
            in.dataset_compliance =
                orphaned_attributes(*in.matches, final_etg, renames).empty();
            break;
        }
        case GatePhase::D_integration: {
            const Etg final_etg = load_etg_json(read_file(paths.etg_final()));
            const Eg eg = parse_eg_ntriples(read_file(paths.eg_nt()), final_etg, base_uri);
            std::vector<CqResult> results;
            for (const auto& cq : ws.purpose.cqs) results.push_back(execute_cq(eg, cq));
            in.answerable_core = answerable_fraction(results, ws.purpose.cqs, Category::Core);
            in.answerable_all = answerable_fraction(results, ws.purpose.cqs, std::nullopt);
            break;
        }
    }
    return run_gate(phase, in, ws.purpose.thresholds);
}

}  // namespace itelos
