#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hullmass/io.hpp"

using namespace hullmass;

namespace {

LinearCode parse(const std::string& text) {
    std::istringstream in(text);
    return io::load_code(in);
}

std::string parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("well-formed files parse") {
    LinearCode c = parse("q=4 n=4 k=2\n1 0 1 3\n0 1 2 2\n");
    CHECK(c.field().order() == 4);
    CHECK(c.length() == 4);
    CHECK(c.dim() == 2);
    CHECK(c.hull_dim(Inner::hermitian) == 1);

    LinearCode zero = parse("q=2 n=3 k=0\n");
    CHECK(zero.dim() == 0);

    // comments, blank lines, stray whitespace
    LinearCode commented = parse(
        "# generator matrix\n\nq=4 n=4 k=2   # header\n1 0 1 3\n# middle\n0 1 2 2\t\n\n");
    CHECK(commented == c);

    // rank-deficient rows are accepted; the true dimension wins
    LinearCode dup = parse("q=2 n=3 k=2\n1 1 0\n1 1 0\n");
    CHECK(dup.dim() == 1);
}

TEST_CASE("round trip through save_code") {
    LinearCode c = parse("q=9 n=5 k=3\n1 0 0 4 7\n0 1 0 2 8\n0 0 1 3 5\n");
    std::ostringstream out;
    io::save_code(out, c.generator());
    std::istringstream in(out.str());
    CHECK(io::load_code(in) == c);
}

TEST_CASE("parse errors name the offending line") {
    CHECK(parse_error("") == "line 1: missing header");
    CHECK(parse_error("n=4 q=4 k=2\n").find("line 1") != std::string::npos);
    CHECK(parse_error("q=4 n=4\n").find("header") != std::string::npos);
    CHECK(parse_error("q=4 n=4 k=2\n1 0 1 7\n0 1 2 2\n").find("line 2") !=
          std::string::npos);  // entry out of range
    CHECK(parse_error("q=4 n=4 k=2\n1 0 1 3\n").find("line 3") != std::string::npos);
    CHECK(parse_error("q=4 n=4 k=2\n1 0 1\n0 1 2 2\n").find("fewer") != std::string::npos);
    CHECK(parse_error("q=4 n=4 k=2\n1 0 1 3 2\n0 1 2 2\n").find("more") !=
          std::string::npos);
    CHECK(parse_error("q=4 n=2 k=3\n").find("k exceeds n") != std::string::npos);
    CHECK(parse_error("q=4 n=4 k=1\n1 0 1 3\nextra stuff\n").find("line 3") !=
          std::string::npos);
}

TEST_CASE("row order does not affect the parsed code") {
    LinearCode a = parse("q=4 n=4 k=2\n1 0 1 3\n0 1 2 2\n");
    LinearCode b = parse("q=4 n=4 k=2\n0 1 2 2\n1 0 1 3\n");
    CHECK(a == b);
    CHECK(a.hull_dim(Inner::hermitian) == b.hull_dim(Inner::hermitian));
}

TEST_CASE("custom field resolver is honored") {
    bool used = false;
    io::FieldResolver resolver = [&](unsigned order) -> const Field& {
        used = true;
        return Field::of_order(order);
    };
    std::istringstream in("q=4 n=2 k=1\n1 2\n");
    LinearCode c = io::load_code(in, resolver);
    CHECK(used);
    CHECK(c.dim() == 1);
}

TEST_CASE("missing files raise errors mentioning the path") {
    try {
        io::load_code_file("/nonexistent/code.txt");
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/code.txt") != std::string::npos);
    }
}
