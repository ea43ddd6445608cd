#include "affolab/manifest.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace affolab {

namespace {

using nlohmann::json;

Scalar parse_scalar(const json& j, long d) {
    try {
        if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
        if (j.is_object()) {
            Rational a = j.contains("a") ? parse_rational(j.at("a").get<std::string>()) : Rational(0);
            Rational b = j.contains("b") ? parse_rational(j.at("b").get<std::string>()) : Rational(0);
            return Scalar(a, b, d);
        }
    } catch (const std::invalid_argument& e) {
        throw ManifestError(ManifestError::Kind::malformed, e.what());
    }
    throw ManifestError(ManifestError::Kind::malformed,
                        "scalar must be a \"p/q\" string or an {a, b} object");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_to_string(s.rational_part());
    return json{{"a", rational_to_string(s.rational_part())},
                {"b", rational_to_string(s.surd_part())}};
}

Matrix parse_matrix(const json& j, int rows, int cols, long d, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ManifestError(ManifestError::Kind::dimension,
                            what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ManifestError(ManifestError::Kind::dimension,
                                what + ": expected " + std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k) m.at(i, k) = parse_scalar(row.at(static_cast<size_t>(k)), d);
    }
    return m;
}

Vector parse_vector(const json& j, int n, long d, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ManifestError(ManifestError::Kind::dimension,
                            what + ": expected " + std::to_string(n) + " entries");
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = parse_scalar(j.at(static_cast<size_t>(i)), d);
    return v;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

std::vector<std::string> parse_tokens(const json& j) {
    std::vector<std::string> tokens;
    if (!j.is_array())
        throw ManifestError(ManifestError::Kind::malformed, "a word must be an array of letters");
    for (const auto& t : j) {
        if (!t.is_string())
            throw ManifestError(ManifestError::Kind::malformed, "word letters must be strings");
        tokens.push_back(t.get<std::string>());
    }
    return tokens;
}

void validate(const Manifest& m) {
    if (m.dimension < 0)
        throw ManifestError(ManifestError::Kind::dimension, "negative dimension");
    if (!is_square_free(m.field_d))
        throw ManifestError(ManifestError::Kind::invalid,
                            "field discriminant must be a square-free positive integer");
    Presentation pres;
    Representation rep = [&] {
        try {
            pres = m.presentation();
            return m.representation();
        } catch (const ManifestError&) {
            throw;
        } catch (const std::exception& e) {
            throw ManifestError(ManifestError::Kind::invalid, e.what());
        }
    }();
    if (!check_relations(pres, rep))
        throw ManifestError(ManifestError::Kind::relator,
                            "a declared relator does not evaluate to the identity");
    if (m.symplectic_form && m.symplectic_form->rows() != m.dimension)
        throw ManifestError(ManifestError::Kind::dimension, "symplectic form dimension mismatch");
    for (const auto& v : m.foliation_span)
        if (v.size() != m.dimension)
            throw ManifestError(ManifestError::Kind::dimension, "foliation span dimension mismatch");
    if (m.tower) {
        if (!m.tower->base)
            throw ManifestError(ManifestError::Kind::invalid, "tower section without a base manifest");
        if (m.tower->base->dimension != m.dimension - 1)
            throw ManifestError(ManifestError::Kind::dimension,
                                "tower base must live one dimension below");
        if (m.tower->projection_tokens.size() != m.generators.size())
            throw ManifestError(ManifestError::Kind::invalid,
                                "tower projection must cover every generator");
        if (pres.generator_index(m.tower->fiber_generator) < 0)
            throw ManifestError(ManifestError::Kind::invalid, "unknown tower fiber generator");
    }
}

}  // namespace

Presentation Manifest::presentation() const {
    Presentation p;
    for (const auto& g : generators) p.generators.push_back(g.name);
    for (const auto& tokens : relator_tokens) {
        try {
            p.relators.push_back(parse_word(p, tokens));
        } catch (const std::invalid_argument& e) {
            throw ManifestError(ManifestError::Kind::malformed, e.what());
        }
    }
    return p;
}

Representation Manifest::representation() const {
    std::vector<std::string> names;
    std::vector<AffineMap> images;
    for (const auto& g : generators) {
        names.push_back(g.name);
        try {
            images.emplace_back(g.linear, g.translation);
        } catch (const std::domain_error& e) {
            throw ManifestError(ManifestError::Kind::invalid,
                                "generator '" + g.name + "': " + e.what());
        }
    }
    return Representation(std::move(names), std::move(images), dimension);
}

int Manifest::tower_fiber_coordinate() const {
    if (!tower) throw std::logic_error("manifest has no tower section");
    if (tower->fiber_coordinate >= 0) return tower->fiber_coordinate;
    for (const auto& g : generators) {
        if (g.name != tower->fiber_generator) continue;
        if (g.linear == Matrix::identity(dimension)) {
            int axis = -1;
            int nonzero = 0;
            for (int i = 0; i < dimension; ++i)
                if (!g.translation[i].is_zero()) {
                    axis = i;
                    ++nonzero;
                }
            if (nonzero == 1) return axis;
        }
    }
    return dimension - 1;
}

bool operator==(const Manifest& a, const Manifest& b) {
    auto gen_eq = [](const ManifestGenerator& x, const ManifestGenerator& y) {
        return x.name == y.name && x.linear == y.linear && x.translation == y.translation;
    };
    if (a.name != b.name || a.dimension != b.dimension || a.field_d != b.field_d ||
        a.generators.size() != b.generators.size() || a.relator_tokens != b.relator_tokens ||
        a.foliation_span != b.foliation_span || a.declared_checks != b.declared_checks)
        return false;
    for (size_t i = 0; i < a.generators.size(); ++i)
        if (!gen_eq(a.generators[i], b.generators[i])) return false;
    if (a.symplectic_form.has_value() != b.symplectic_form.has_value()) return false;
    if (a.symplectic_form && *a.symplectic_form != *b.symplectic_form) return false;
    if (a.tower.has_value() != b.tower.has_value()) return false;
    if (a.tower) {
        if (a.tower->projection_tokens != b.tower->projection_tokens ||
            a.tower->fiber_generator != b.tower->fiber_generator ||
            a.tower->fiber_coordinate != b.tower->fiber_coordinate)
            return false;
        if (static_cast<bool>(a.tower->base) != static_cast<bool>(b.tower->base)) return false;
        if (a.tower->base && !(*a.tower->base == *b.tower->base)) return false;
    }
    return true;
}

Manifest manifest_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ManifestError(ManifestError::Kind::malformed, "manifest must be a JSON object");
    Manifest m;
    try {
        m.name = j.value("name", "");
        m.description = j.value("description", "");
        if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
            throw ManifestError(ManifestError::Kind::malformed, "manifest needs an integer dimension");
        m.dimension = j.at("dimension").get<int>();
        m.field_d = j.value("field", 1);

        for (const auto& jg : j.value("generators", json::array())) {
            ManifestGenerator g;
            if (!jg.contains("name"))
                throw ManifestError(ManifestError::Kind::malformed, "generator without a name");
            g.name = jg.at("name").get<std::string>();
            g.linear = jg.contains("linear")
                           ? parse_matrix(jg.at("linear"), m.dimension, m.dimension, m.field_d,
                                          "generator '" + g.name + "' linear part")
                           : Matrix::identity(m.dimension);
            g.translation = jg.contains("translation")
                                ? parse_vector(jg.at("translation"), m.dimension, m.field_d,
                                               "generator '" + g.name + "' translation")
                                : Vector(m.dimension);
            m.generators.push_back(std::move(g));
        }
        for (const auto& jr : j.value("relators", json::array()))
            m.relator_tokens.push_back(parse_tokens(jr));
        if (j.contains("symplectic_form")) {
            Matrix omega = parse_matrix(j.at("symplectic_form"), m.dimension, m.dimension,
                                        m.field_d, "symplectic form");
            try {
                BilinearForm check(omega);
            } catch (const std::invalid_argument& e) {
                throw ManifestError(ManifestError::Kind::invalid, e.what());
            }
            m.symplectic_form = std::move(omega);
        }
        for (const auto& jv : j.value("foliation_span", json::array()))
            m.foliation_span.push_back(parse_vector(jv, m.dimension, m.field_d, "foliation span"));
        if (j.contains("tower")) {
            const json& jt = j.at("tower");
            TowerSection t;
            if (jt.contains("base"))
                t.base = std::make_shared<Manifest>(manifest_from_json(jt.at("base")));
            else if (jt.contains("base_example"))
                t.base = std::make_shared<Manifest>(
                    catalog_example(jt.at("base_example").get<std::string>()));
            t.fiber_generator = jt.value("fiber_generator", "");
            t.fiber_coordinate = jt.value("fiber_coordinate", -1);
            const json& jp = jt.value("projection", json::object());
            for (const auto& jg : j.value("generators", json::array())) {
                std::string name = jg.at("name").get<std::string>();
                if (jp.contains(name))
                    t.projection_tokens.push_back(parse_tokens(jp.at(name)));
                else
                    t.projection_tokens.push_back({});
            }
            m.tower = std::move(t);
        }
        for (const auto& jc : j.value("declared_checks", json::array()))
            m.declared_checks.push_back(jc.get<std::string>());
    } catch (const ManifestError&) {
        throw;
    } catch (const json::exception& e) {
        throw ManifestError(ManifestError::Kind::malformed, e.what());
    }
    validate(m);
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError(ManifestError::Kind::malformed, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ManifestError(ManifestError::Kind::malformed, e.what());
    }
    return manifest_from_json(j);
}

nlohmann::json manifest_to_json(const Manifest& m) {
    json j;
    j["name"] = m.name;
    if (!m.description.empty()) j["description"] = m.description;
    j["dimension"] = m.dimension;
    j["field"] = m.field_d;
    json gens = json::array();
    for (const auto& g : m.generators) {
        json jg;
        jg["name"] = g.name;
        jg["linear"] = matrix_to_json(g.linear);
        jg["translation"] = vector_to_json(g.translation);
        gens.push_back(std::move(jg));
    }
    j["generators"] = std::move(gens);
    json rels = json::array();
    for (const auto& r : m.relator_tokens) rels.push_back(r);
    j["relators"] = std::move(rels);
    if (m.symplectic_form) j["symplectic_form"] = matrix_to_json(*m.symplectic_form);
    if (!m.foliation_span.empty()) {
        json span = json::array();
        for (const auto& v : m.foliation_span) span.push_back(vector_to_json(v));
        j["foliation_span"] = std::move(span);
    }
    if (m.tower) {
        json jt;
        if (m.tower->base) jt["base"] = manifest_to_json(*m.tower->base);
        jt["fiber_generator"] = m.tower->fiber_generator;
        if (m.tower->fiber_coordinate >= 0) jt["fiber_coordinate"] = m.tower->fiber_coordinate;
        json jp;
        for (size_t i = 0; i < m.generators.size(); ++i)
            jp[m.generators[i].name] = m.tower->projection_tokens[i];
        jt["projection"] = std::move(jp);
        j["tower"] = std::move(jt);
    }
    if (!m.declared_checks.empty()) j["declared_checks"] = m.declared_checks;
    return j;
}

Manifest build_suspension(const Manifest& base) {
    int n = base.dimension;
    Manifest s;
    s.name = base.name.empty() ? "suspension" : base.name + "_suspension";
    s.description = "cotangent suspension of " + (base.name.empty() ? "a base manifest" : base.name);
    s.dimension = 2 * n;
    s.field_d = base.field_d;
    for (const auto& g : base.generators) {
        ManifestGenerator sg;
        sg.name = g.name;
        Matrix lin(2 * n, 2 * n);
        Matrix contra = inverse(g.linear).transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                lin.at(i, j) = g.linear.at(i, j);
                lin.at(n + i, n + j) = contra.at(i, j);
            }
        Vector t(2 * n);
        for (int i = 0; i < n; ++i) t[i] = g.translation[i];
        sg.linear = std::move(lin);
        sg.translation = std::move(t);
        s.generators.push_back(std::move(sg));
    }
    s.relator_tokens = base.relator_tokens;
    Matrix omega(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        omega.at(i, n + i) = Scalar(1);
        omega.at(n + i, i) = Scalar(-1);
    }
    s.symplectic_form = std::move(omega);
    for (int i = 0; i < n; ++i) s.foliation_span.push_back(Vector::unit(2 * n, n + i));
    s.declared_checks = {"verify", "unimodular", "duality"};
    validate(s);
    return s;
}

namespace {

ManifestGenerator translation_gen(const std::string& name, int dim, int axis) {
    ManifestGenerator g;
    g.name = name;
    g.linear = Matrix::identity(dim);
    g.translation = Vector(dim);
    g.translation[axis] = Scalar(1);
    return g;
}

std::vector<std::string> commutator(const std::string& a, const std::string& b) {
    return {a, b, a + "^-1", b + "^-1"};
}

Matrix omega_canonical(int n) {
    // dx_1 ^ dx_{k+1} + ... pairing the first and second halves.
    Matrix omega(n, n);
    for (int i = 0; i < n / 2; ++i) {
        omega.at(i, n / 2 + i) = Scalar(1);
        omega.at(n / 2 + i, i) = Scalar(-1);
    }
    return omega;
}

Manifest make_flat_lattice(const std::string& name, int dim, const std::string& desc) {
    Manifest m;
    m.name = name;
    m.description = desc;
    m.dimension = dim;
    for (int i = 0; i < dim; ++i)
        m.generators.push_back(translation_gen("g" + std::to_string(i + 1), dim, i));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            m.relator_tokens.push_back(
                commutator("g" + std::to_string(i + 1), "g" + std::to_string(j + 1)));
    m.declared_checks = {"verify", "unimodular", "translation"};
    return m;
}

/// Linear part shared by the two shear generators of the nilpotent examples:
/// (x1,x2,x3,x4) -> (x1+x2, x2, x3, -x3+x4).
Matrix nilpotent_shear4() {
    Matrix l = Matrix::identity(4);
    l.at(0, 1) = Scalar(1);
    l.at(3, 2) = Scalar(-1);
    return l;
}

Manifest make_flat_T4() {
    Manifest m = make_flat_lattice("flat_T4", 4, "flat torus: R^4 modulo the translations t_e1..t_e4");
    m.symplectic_form = omega_canonical(4);
    m.foliation_span = {Vector::unit(4, 0), Vector::unit(4, 1)};
    m.declared_checks = {"verify", "unimodular", "translation", "rationality", "reduce"};
    return m;
}

Manifest make_flat_T2() {
    Manifest m = make_flat_lattice("flat_T2", 2, "flat two-torus with the area form");
    m.symplectic_form = omega_canonical(2);
    m.foliation_span = {Vector::unit(2, 0)};
    m.declared_checks = {"verify", "unimodular", "translation", "rationality"};
    return m;
}

Manifest make_nilpotent_T4_base() {
    Manifest m;
    m.name = "nilpotent_T4_base";
    m.description = "three-dimensional quotient of nilpotent_T4 along the fiber axis";
    m.dimension = 3;
    Matrix shear = Matrix::identity(3);
    shear.at(2, 1) = Scalar(-1);
    ManifestGenerator k2{"g2", shear, Vector{Scalar(1), Scalar(0), Scalar(0)}};
    ManifestGenerator k3{"g3", Matrix::identity(3), Vector{Scalar(0), Scalar(0), Scalar(1)}};
    ManifestGenerator k4{"g4", shear, Vector{Scalar(0), Scalar(1), Scalar(0)}};
    m.generators = {k2, k3, k4};
    m.relator_tokens = {commutator("g2", "g3"), commutator("g3", "g4"),
                        {"g2", "g4", "g2^-1", "g4^-1", "g3"}};
    m.declared_checks = {"verify", "unimodular"};
    return m;
}

Manifest make_nilpotent_T4() {
    Manifest m;
    m.name = "nilpotent_T4";
    m.description = "nilpotent example: quotient of R^4 by the maps h1..h4 with shear holonomy";
    m.dimension = 4;
    Matrix shear = nilpotent_shear4();
    m.generators.push_back(translation_gen("g1", 4, 0));
    m.generators.push_back({"g2", shear, Vector{Scalar(0), Scalar(1), Scalar(0), Scalar(0)}});
    m.generators.push_back(translation_gen("g3", 4, 3));
    m.generators.push_back({"g4", shear, Vector{Scalar(0), Scalar(0), Scalar(1), Scalar(0)}});
    m.relator_tokens = {commutator("g1", "g2"), commutator("g1", "g3"), commutator("g1", "g4"),
                        commutator("g2", "g3"), commutator("g3", "g4"),
                        {"g2", "g4", "g2^-1", "g4^-1", "g3", "g1"}};
    m.symplectic_form = omega_canonical(4);
    m.foliation_span = {Vector::unit(4, 0), Vector::unit(4, 1)};
    TowerSection tower;
    tower.base = std::make_shared<Manifest>(make_nilpotent_T4_base());
    tower.projection_tokens = {{}, {"g2"}, {"g3"}, {"g4"}};
    tower.fiber_generator = "g1";
    tower.fiber_coordinate = 0;
    m.tower = std::move(tower);
    m.declared_checks = {"verify", "unimodular", "translation", "rationality", "reduce", "tower"};
    return m;
}

Manifest make_half_compact_T4() {
    Manifest m;
    m.name = "half_compact_T4";
    m.description = "mixed example: h1, h2 with shear holonomy plus the translations t_e3, t_e4";
    m.dimension = 4;
    Matrix shear = nilpotent_shear4();
    m.generators.push_back(translation_gen("g1", 4, 0));
    m.generators.push_back({"g2", shear, Vector{Scalar(0), Scalar(1), Scalar(0), Scalar(0)}});
    m.generators.push_back(translation_gen("g3", 4, 2));
    m.generators.push_back(translation_gen("g4", 4, 3));
    m.relator_tokens = {commutator("g1", "g2"), commutator("g1", "g3"), commutator("g1", "g4"),
                        commutator("g2", "g4"), commutator("g3", "g4"),
                        {"g2", "g3", "g2^-1", "g3^-1", "g4"}};
    m.symplectic_form = omega_canonical(4);
    m.foliation_span = {Vector::unit(4, 0), Vector::unit(4, 1)};
    m.declared_checks = {"verify", "unimodular", "translation", "rationality"};
    return m;
}

/// f_{s,t}(x, y) = (x + s y + s^2/2 + t, y + s).
ManifestGenerator shear_flow_gen(const std::string& name, const Scalar& s, const Scalar& t) {
    Matrix lin = Matrix::identity(2);
    lin.at(0, 1) = s;
    Vector trans(2);
    trans[0] = s * s * Scalar(Rational(1, 2)) + t;
    trans[1] = s;
    return {name, lin, trans};
}

Manifest make_hgroup_torus() {
    Manifest m;
    m.name = "hgroup_torus";
    m.description =
        "complete affine two-torus from the one-parameter shear group, lattice f_{sqrt2,0}, f_{1,1}; "
        "its holonomy contains no translation";
    m.dimension = 2;
    m.field_d = 2;
    m.generators = {shear_flow_gen("g1", Scalar::surd(2), Scalar(0)),
                    shear_flow_gen("g2", Scalar(1), Scalar(1))};
    m.relator_tokens = {commutator("g1", "g2")};
    m.symplectic_form = omega_canonical(2);
    m.foliation_span = {Vector::unit(2, 0)};
    m.declared_checks = {"verify", "unimodular"};
    return m;
}

Manifest make_nilpotent_T2() {
    Manifest m;
    m.name = "nilpotent_T2";
    m.description = "rational lattice f_{1,0}, f_{1,1} of the one-parameter shear group";
    m.dimension = 2;
    m.generators = {shear_flow_gen("g1", Scalar(1), Scalar(0)),
                    shear_flow_gen("g2", Scalar(1), Scalar(1))};
    m.relator_tokens = {commutator("g1", "g2")};
    m.symplectic_form = omega_canonical(2);
    m.foliation_span = {Vector::unit(2, 0)};
    m.declared_checks = {"verify", "unimodular", "translation", "rationality"};
    return m;
}

Manifest make_free_2() {
    Manifest m;
    m.name = "free_2";
    m.description = "free linear group on the two shears [[1,2],[0,1]] and [[1,0],[2,1]]";
    m.dimension = 2;
    Matrix a = Matrix::identity(2);
    a.at(0, 1) = Scalar(2);
    Matrix b = Matrix::identity(2);
    b.at(1, 0) = Scalar(2);
    m.generators = {{"g1", a, Vector(2)}, {"g2", b, Vector(2)}};
    m.declared_checks = {"verify", "unimodular"};
    return m;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"flat_T1",          "flat_T2",        "flat_T3",     "flat_T4",     "nilpotent_T4",
            "nilpotent_T4_base", "half_compact_T4", "hgroup_torus", "nilpotent_T2", "free_2"};
}

Manifest catalog_example(const std::string& name) {
    if (name == "flat_T1") return make_flat_lattice("flat_T1", 1, "flat circle: R modulo t_e1");
    if (name == "flat_T2") return make_flat_T2();
    if (name == "flat_T3")
        return make_flat_lattice("flat_T3", 3, "flat three-torus: R^3 modulo t_e1..t_e3");
    if (name == "flat_T4") return make_flat_T4();
    if (name == "nilpotent_T4") return make_nilpotent_T4();
    if (name == "nilpotent_T4_base") return make_nilpotent_T4_base();
    if (name == "half_compact_T4") return make_half_compact_T4();
    if (name == "hgroup_torus") return make_hgroup_torus();
    if (name == "nilpotent_T2") return make_nilpotent_T2();
    if (name == "free_2") return make_free_2();
    throw ManifestError(ManifestError::Kind::invalid, "unknown catalog example '" + name + "'");
}

}  // namespace affolab
