#pragma once

#include "ratmod/analysis.hpp"
#include "ratmod/conf.hpp"
#include "ratmod/error.hpp"
#include "ratmod/presentation.hpp"
#include "ratmod_cli/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ratmod::cli {

int exit_code(ErrorKind kind);
std::string status_name(ErrorKind kind);

struct LoadedAlgebra {
    std::shared_ptr<const ExpandedPresentation> expanded;
    std::optional<PdAlgebra> pd;  // present when the file declares an orientation

    const CdgaPtr& algebra() const { return expanded->algebra(); }
};
// Expands the presentation and runs verify_pd when it is oriented.
LoadedAlgebra load_algebra(const std::string& path);
LoadedAlgebra load_pd_algebra(const std::string& path);  // orientation required

// Images of generators listed as name/degree/image tables in a TOML file.
struct GeneratorImages {
    std::vector<Generator> generators;
    std::vector<std::string> images;
    std::vector<std::string> relations;
};
GeneratorImages load_generator_images(const std::string& path);

// Morphism between presented algebras from a TOML table `[images]` mapping
// every source generator to a polynomial in the target generators.
AlgebraMorphism load_algebra_map(const std::string& path, const ExpandedPresentation& source,
                                 const ExpandedPresentation& target);

RingSummary summarize(const CohomologyRing& ring);
MasseySummary summarize(const MasseyResult& m, const CohomologyRing& ring);

struct InputOptions {
    std::string input;
    std::optional<int> max_degree;
};

struct MasseyOptions {
    std::string input;
    std::vector<std::string> triple;  // three element references, or empty with search
    bool search = false;
    std::optional<int> max_degree;
};

struct DiskBundleOptions {
    std::string base;
    std::string euler;
    int rank = 0;
    std::string massey = "none";  // none or auto
    std::optional<std::string> check_presentation;
    bool truncate = false;
    std::optional<int> max_degree;
};

struct PuncturedOptions {
    std::string manifold;
    bool truncate = false;
    std::optional<int> max_degree;
};

struct PrettyOptions {
    std::string source;
    std::string target;
    std::string map;
    bool truncate = false;
    std::optional<int> max_degree;
};

struct ComplementOptions {
    std::string ambient;
    std::string fiber;
    int n = 0;
    int k = 0;
    int r = 0;
    std::optional<int> max_degree;
};

// Every command catches library errors and encodes them in the report.
Report run_verify(const InputOptions& o);
Report run_cohomology(const InputOptions& o);
Report run_series(const InputOptions& o);
Report run_massey(const MasseyOptions& o);
Report run_conf2_disk_bundle(const DiskBundleOptions& o);
Report run_conf2_punctured(const PuncturedOptions& o);
Report run_conf2_pretty(const PrettyOptions& o);
Report run_complement(const ComplementOptions& o);

}  // namespace ratmod::cli
