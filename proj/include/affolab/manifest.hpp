#pragma once

#include "affolab/group.hpp"

#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <optional>

namespace affolab {

/// Structured load/validation failure, mapped to exit code 2 by the CLI.
class ManifestError : public std::runtime_error {
public:
    enum class Kind { malformed, dimension, relator, invalid };

    ManifestError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct ManifestGenerator {
    std::string name;
    Matrix linear;
    Vector translation;
};

struct Manifest;

/// Tower data: the lower-stage manifest plus the projection of upper
/// generators to lower words; the fiber generator projects to the empty word.
struct TowerSection {
    std::shared_ptr<Manifest> base;
    std::vector<std::vector<std::string>> projection_tokens;  // aligned with upper generators
    std::string fiber_generator;
    int fiber_coordinate = -1;  // -1: infer from the fiber generator's translation
};

struct Manifest {
    std::string name;
    std::string description;
    int dimension = 0;
    long field_d = 1;
    std::vector<ManifestGenerator> generators;
    std::vector<std::vector<std::string>> relator_tokens;
    std::optional<Matrix> symplectic_form;
    std::vector<Vector> foliation_span;
    std::optional<TowerSection> tower;
    std::vector<std::string> declared_checks;

    Presentation presentation() const;
    Representation representation() const;

    /// Effective fiber coordinate of the tower section (explicit value, or the
    /// axis translated by the fiber generator when it is a pure translation,
    /// or the last coordinate).
    int tower_fiber_coordinate() const;
};

bool operator==(const Manifest& a, const Manifest& b);

/// Exact parse; throws ManifestError with a kind distinguishing malformed
/// scalars, inconsistent dimensions and relator violations.
Manifest manifest_from_json(const nlohmann::json& j);
Manifest load_manifest(const std::string& path);
nlohmann::json manifest_to_json(const Manifest& m);

/// Cotangent-suspension construction: each generator acts by the base affine
/// map on the first n coordinates and by the contragredient transpose(L^-1)
/// on the last n; canonical symplectic form; foliation along the fiber
/// coordinates. The result passes the duality check by construction.
Manifest build_suspension(const Manifest& base);

std::vector<std::string> catalog_names();
Manifest catalog_example(const std::string& name);

}  // namespace affolab
