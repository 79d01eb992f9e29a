#include "cli.hpp"

#include "csl/cubic_csl.hpp"
#include "csl/diamond.hpp"
#include "csl/series.hpp"
#include "csl/shifted_square.hpp"
#include "csl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace csl::cli {

namespace {

using nlohmann::json;

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r)
{
    return to_string(r);
}

json vector_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(rational_json(x));
    return out;
}

json matrix_json(const RationalMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json lattice_json(const RationalLattice& l)
{
    json cols = json::array();
    for (const auto& c : l.basis().columns())
        cols.push_back(vector_json(c));
    return {{"basis", cols}, {"hnf", true}};
}

json coset_json(const CosetLattice& c)
{
    json j = lattice_json(c.sublattice());
    j["representative"] = vector_json(c.representative());
    return j;
}

// Integral rationals print as JSON integers.
json index_json(const Rational& r)
{
    if (is_integral(r) && r.get_num().fits_slong_p())
        return r.get_num().get_si();
    return to_string(r);
}

json quaternion_json(const Quaternion& q)
{
    json out = json::array();
    for (std::size_t k = 0; k < 4; ++k) {
        Rational c = q.component(k);
        out.push_back(index_json(c));
    }
    return out;
}

json coincidence_json(const PlanarCoincidence& c)
{
    return {{"z", to_string(c.numerator)},
            {"unit", to_string(c.unit)},
            {"reflection", c.reflection},
            {"sigma", coincidence_index(c).get_si()},
            {"matrix", matrix_json(isometry_matrix(c))}};
}

RationalMatrix parse_matrix(const json& j)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& x : row)
            r.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        throw DomainError("empty matrix");
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw DomainError("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(i, k) = rows[i][k];
    }
    return m;
}

RationalVector parse_vector(const json& j)
{
    RationalVector v;
    for (const auto& x : j)
        v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return v;
}

struct Options {
    std::uint32_t max_index = 25;
    std::string format = "json";
    std::string shift;
    std::string shift_class;
    std::string quaternion;
    std::string lattice = "P";
    std::string which = "z2";
    std::string suite;
    std::string file;
    std::string isometry;
    std::uint32_t bound = 50;
    bool improper = false;
    bool all_units = false;
    bool reflections = false;
    bool distinct = false;
    bool rotations = false;
};

void square_rotations(const Options& o, std::ostream& out)
{
    for (const auto& z : enumerate_numerators(o.max_index)) {
        std::vector<PlanarCoincidence> list;
        if (o.all_units) {
            for (Unit u : Unit::all())
                list.push_back({z, u, false});
            if (o.reflections)
                for (Unit u : Unit::all())
                    list.push_back({z, u, true});
        } else {
            list.push_back({z, Unit::one(), false});
            if (o.reflections)
                list.push_back({z, Unit::one(), true});
        }
        for (const auto& c : list) {
            if (o.format == "csv")
                out << to_string(c.numerator) << ',' << to_string(c.unit) << ',' << (c.reflection ? 1 : 0) << ','
                    << coincidence_index(c) << '\n';
            else
                out << coincidence_json(c).dump() << '\n';
        }
    }
}

GaussianRational require_rational_shift(const Options& o)
{
    if (o.shift.empty())
        throw CLI::ValidationError("--shift", "a rational shift is required");
    return parse_gaussian_rational(o.shift);
}

void square_shifted(const Options& o, std::ostream& out)
{
    GaussianRational x = require_rational_shift(o);
    auto members = enumerate_shifted(x, o.max_index);
    if (o.distinct)
        members = distinct_csls(members);
    for (const auto& m : members) {
        if (o.format == "csv") {
            out << to_string(m.coincidence.numerator) << ',' << to_string(m.coincidence.unit) << ','
                << (m.coincidence.reflection ? 1 : 0) << ',' << coincidence_index(m.coincidence) << ','
                << to_string(m.representative) << '\n';
            continue;
        }
        json j = coincidence_json(m.coincidence);
        j["representative"] = to_string(m.representative);
        out << j.dump() << '\n';
    }
}

json generator_json(const std::optional<PlanarCoincidence>& c)
{
    if (!c)
        return nullptr;
    return {{"z", to_string(c->numerator)}, {"unit", to_string(c->unit)}, {"reflection", c->reflection}};
}

void square_classify(const Options& o, std::ostream& out)
{
    if (o.shift.empty() == o.shift_class.empty())
        throw CLI::ValidationError("--shift/--shift-class", "exactly one of them is required");
    ShiftClass x = o.shift.empty() ? parse_shift_class(o.shift_class)
                                   : ShiftClass(RationalShift{parse_gaussian_rational(o.shift)});
    ShiftedOcDescription d = describe(x);
    static const char* kinds[] = {"trivial", "single-reflection", "full-characterization"};
    json j{{"shift", to_string(x)}, {"kind", kinds[static_cast<int>(d.kind)]}, {"branch", d.branch},
           {"generator", generator_json(d.generator)}};
    if (d.literal_generator)
        j["literal_generator"] = {{"z", to_string(d.literal_generator->first)},
                                  {"unit", to_string(d.literal_generator->second)}};
    else
        j["literal_generator"] = nullptr;
    j["is_group"] = d.is_group ? json(*d.is_group) : json(nullptr);
    out << j.dump() << '\n';
}

Quaternion require_quaternion(const Options& o)
{
    if (o.quaternion.empty())
        throw CLI::ValidationError("--quaternion", "a quaternion a,b,c,d is required");
    Quaternion q = parse_quaternion(o.quaternion);
    if (!q.is_primitive())
        throw DomainError("quaternion " + to_string(q) + " is not primitive");
    return q;
}

void cubic_rotations(const Options& o, std::ostream& out)
{
    for (const auto& q : enumerate_primitive(4 * o.max_index)) {
        Integer sigma = cubic_index(q);
        if (sigma > o.max_index)
            continue;
        if (o.format == "csv") {
            out << '"' << to_string(q) << "\"," << q.norm() << ',' << sigma << '\n';
            continue;
        }
        json j{{"q", quaternion_json(q)},
               {"norm", q.norm().get_si()},
               {"sigma", sigma.get_si()},
               {"matrix", matrix_json(cayley_matrix(q))}};
        out << j.dump() << '\n';
    }
}

void cubic_csl(const Options& o, std::ostream& out)
{
    Quaternion q = require_quaternion(o);
    CubicKind kind = parse_cubic_kind(o.lattice);
    RationalLattice l = cubic_lattice(kind);
    RationalLattice c = csl_cubic(kind, q);
    json j{{"q", quaternion_json(q)},
           {"lattice", to_string(kind)},
           {"sigma", index_json(sublattice_index(l, c))},
           {"csl", lattice_json(c)},
           {"dsc", lattice_json(dsc_cubic(kind, q))}};
    if (kind == CubicKind::BodyCentered)
        j["spanset"] = lattice_json(csl_bcc_basis(q));
    out << j.dump() << '\n';
}

void diamond(const Options& o, std::ostream& out)
{
    Quaternion q = require_quaternion(o);
    DiamondResult r = diamond_coincidence({q, o.improper});
    json cosets = json::array();
    for (const auto& c : r.csml.cosets)
        cosets.push_back(coset_json(c));
    json pairs = json::array();
    for (const auto& [a, b] : r.csml.pairs)
        pairs.push_back({a, b});
    json j{{"q", quaternion_json(q)},
           {"improper", o.improper},
           {"norm_class", to_string(r.norm_class)},
           {"sigma", index_json(r.index)},
           {"cosets", r.coset_count},
           {"shifted_fcc_member", shifted_fcc_member({q, o.improper})},
           {"csml", {{"index", index_json(r.csml.index)}, {"cosets", cosets}, {"pairs", pairs}}}};
    out << j.dump() << '\n';
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--file", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("--file", std::string("malformed JSON: ") + e.what());
    }
}

void multilattice(const Options& o, std::ostream& out)
{
    json input = read_json_file(o.file);
    json iso_input = o.isometry.empty() ? input.value("isometry", json()) : read_json_file(o.isometry);
    if (iso_input.is_null())
        throw CLI::ValidationError("--isometry", "no isometry given in the file or via --isometry");
    RationalMatrix vectors = parse_matrix(input.at("basis"));
    std::size_t dim = input.value("dim", vectors.cols());
    // Basis vectors are listed one per row.
    RationalMatrix basis = vectors.transposed();
    if (basis.rows() != dim)
        throw DomainError("basis vectors do not match the dimension");
    std::vector<RationalVector> shifts;
    for (const auto& s : input.value("shifts", json::array({json::array()})))
        shifts.push_back(s.empty() ? RationalVector(dim, Rational(0)) : parse_vector(s));
    Multilattice ml(RationalLattice(basis), shifts);
    RationalMatrix r = parse_matrix(iso_input.at("R"));
    CsmlDescription c = multilattice_coincidence(ml, r);
    json cosets = json::array();
    for (const auto& cl : c.cosets)
        cosets.push_back(coset_json(cl));
    json pairs = json::array();
    for (const auto& [a, b] : c.pairs)
        pairs.push_back({a, b});
    json j{{"index", index_json(c.index)},
           {"lattice_index", index_json(coincidence_index(ml.lattice(), r))},
           {"cosets", cosets},
           {"pairs", pairs}};
    if (iso_input.contains("v")) {
        AffineIsometry iso(r, parse_vector(iso_input.at("v")));
        bool affine = is_affine_coincidence(ml.lattice(), iso);
        j["affine_coincidence"] = affine;
        j["acsl"] = affine ? coset_json(acsl(ml.lattice(), iso)) : json(nullptr);
    }
    out << j.dump() << '\n';
}

void series(const Options& o, std::ostream& out)
{
    CountingFunction f = parse_counting_function(o.which);
    auto table = o.rotations ? rotation_counts(f, o.max_index) : coefficients(f, o.max_index);
    for (std::uint32_t m = 1; m <= o.max_index; ++m) {
        if (o.format == "csv")
            out << m << ',' << table[m] << '\n';
        else
            out << json{{"m", m}, {"f", table[m]}}.dump() << '\n';
    }
}

void verify(const Options& o, std::ostream& out)
{
    VerifyReport r = run_suite(o.suite, o.bound);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"suite", r.suite}, {"bound", r.bound}, {"passed", r.passed()}, {"checks", checks}}.dump(2)
        << '\n';
    if (!r.passed())
        throw VerificationFailed(std::to_string(r.failures()) + " identities failed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coincidence site lattices of square, cubic and diamond structures"};
    app.name("csl");
    app.require_subcommand(1);
    Options o;
    std::function<void(const Options&, std::ostream&)> action;
    auto on = [&](CLI::App* sub, void (*fn)(const Options&, std::ostream&)) {
        sub->callback([&action, fn] { action = fn; });
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* square = app.add_subcommand("square", "Square lattice Z^2");
    square->require_subcommand(1);
    CLI::App* rot = square->add_subcommand("rotations", "Coincidence isometries up to an index");
    rot->add_option("--max-index", o.max_index, "Largest index")->check(CLI::PositiveNumber);
    rot->add_flag("--all-units", o.all_units, "One record per unit instead of per numerator");
    rot->add_flag("--reflections", o.reflections, "Include coincidence reflections");
    add_format(rot);
    on(rot, square_rotations);
    CLI::App* shifted = square->add_subcommand("shifted", "Coincidences of a shifted square lattice");
    shifted->add_option("--shift", o.shift, "Shift as a Gaussian rational, e.g. (2+1i)/5");
    shifted->add_option("--max-index", o.max_index, "Largest index")->check(CLI::PositiveNumber);
    shifted->add_flag("--distinct", o.distinct, "Only one member per distinct CSL");
    add_format(shifted);
    on(shifted, square_shifted);
    CLI::App* classify = square->add_subcommand("classify-shift", "Structure of OC(x + Z^2)");
    classify->add_option("--shift", o.shift, "Rational shift");
    classify->add_option("--shift-class", o.shift_class,
                         "independent | re-irrational:b=B | im-irrational:a=A | dependent:P1/Q1,P2/Q2");
    on(classify, square_classify);

    CLI::App* cubic = app.add_subcommand("cubic", "Cubic lattices");
    cubic->require_subcommand(1);
    CLI::App* crot = cubic->add_subcommand("rotations", "Primitive quaternions up to an index");
    crot->add_option("--max-index", o.max_index, "Largest index")->check(CLI::PositiveNumber);
    add_format(crot);
    on(crot, cubic_rotations);
    CLI::App* ccsl = cubic->add_subcommand("csl", "CSL and DSC lattice for one rotation");
    ccsl->add_option("--quaternion", o.quaternion, "a,b,c,d")->required();
    ccsl->add_option("--lattice", o.lattice, "P, B or F");
    on(ccsl, cubic_csl);

    CLI::App* dia = app.add_subcommand("diamond", "Coincidence of the diamond packing");
    dia->add_option("--quaternion", o.quaternion, "a,b,c,d")->required();
    dia->add_flag("--improper", o.improper, "Rotoreflection -R_q");
    on(dia, diamond);

    CLI::App* ml = app.add_subcommand("multilattice", "CSML of a multilattice from a JSON file");
    ml->add_option("--file", o.file, "Multilattice JSON")->required();
    ml->add_option("--isometry", o.isometry, "Isometry JSON, if not inside the multilattice file");
    on(ml, multilattice);

    CLI::App* ser = app.add_subcommand("series", "Coefficient tables of counting functions");
    ser->add_option("--which", o.which, "z2 | z2-rot | z3 | z3-rot | d3p | fcc-shift | shift:X");
    ser->add_option("--max,--max-index", o.max_index, "Largest index")->check(CLI::PositiveNumber);
    ser->add_flag("--rotations", o.rotations, "Count coincidence rotations instead of CSLs");
    add_format(ser);
    on(ser, series);

    CLI::App* ver = app.add_subcommand("verify", "Oracle verification suites");
    ver->add_option("--suite", o.suite, "square | shifted | cubic | diamond | multilattice")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    ver->add_option("--bound", o.bound, "Index or norm bound")->check(CLI::PositiveNumber);
    on(ver, verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        action(o, out);
        return 0;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace csl::cli
