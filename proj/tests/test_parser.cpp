#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "grakit/canonical.hpp"

using namespace grakit;

namespace {

std::string err_of(const std::string& text) {
    try {
        parse_session(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return "";
}

bool mentions_position(const std::string& msg) {
    return msg.find("line ") != std::string::npos && msg.find("col ") != std::string::npos;
}

}  // namespace

TEST_CASE("valid ring declaration") {
    SessionIR s = parse_session("ring R { char=32003; vars=[x:1]; ideal=[x^3]; }");
    REQUIRE(s.rings.size() == 1);
    CHECK(s.rings[0].first == "R");
    const auto& R = s.rings[0].second;
    CHECK(R.ctx.field.modulus() == 32003);
    CHECK(R.ctx.weights == std::vector<int>{1});
    CHECK(R.ideal_gens.size() == 1);
}

TEST_CASE("semantic errors carry positions") {
    // bare-variable monomial in a generator: presentation not minimal
    std::string e1 = err_of("ring R { char=32003; vars=[x:1,y:2]; ideal=[x^2-y]; }");
    CHECK(!e1.empty());
    CHECK(mentions_position(e1));
    CHECK(e1.find("bare-variable") != std::string::npos);

    // inhomogeneous generator
    std::string e2 = err_of("ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2+y]; }");
    CHECK(!e2.empty());
    CHECK(mentions_position(e2));
    CHECK(e2.find("homogeneous") != std::string::npos);

    // even characteristic
    std::string e3 = err_of("ring R { char=2; vars=[x:1]; ideal=[x^2]; }");
    CHECK(!e3.empty());
    CHECK(mentions_position(e3));

    CHECK(!err_of("ring R { char=32003; vars=[x:0]; ideal=[x^2]; }").empty());
    CHECK(!err_of("ring R { char=32003; vars=[x:1]; ideal=[x^2] }").empty());  // missing ;
}

TEST_CASE("undeclared names are rejected") {
    CHECK(mentions_position(
        err_of("ring R { char=32003; vars=[x:1]; ideal=[x^2]; }\n"
               "task t { kind=betti; ring=S; module=k; T=4; }")));
    CHECK(mentions_position(
        err_of("ring R { char=32003; vars=[x:1]; ideal=[x^2]; }\n"
               "task t { kind=betti; ring=R; module=M; T=4; }")));
}

TEST_CASE("task parameter validation") {
    std::string head = "ring R { char=32003; vars=[x:1]; ideal=[x^2]; }\n";
    CHECK(err_of(head + "task t { kind=koszul; ring=R; T=0; }") != "");
    CHECK(err_of(head + "task t { kind=verify-main1; ring=R; module=k; i=0; T=4; }") != "");
    CHECK(err_of(head + "task t { kind=verify-main2; ring=R; m=0; n=0; T=4; }") != "");
    CHECK(err_of(head + "task t { kind=bogus-kind; ring=R; }") != "");
    CHECK(err_of(head + "task t { kind=betti; ring=R; module=k; }") != "");  // T missing
    CHECK(err_of(head + "task t { kind=betti; ring=R; module=k; T=4; }") == "");
}

TEST_CASE("module declarations are validated and minimalized") {
    std::string text =
        "ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2,y^2]; }\n"
        "module M over R { gens=[0,1]; rels=[[y,-1]]; }\n";
    SessionIR s = parse_session(text);
    REQUIRE(s.modules.size() == 1);
    // unit entry cancels: rank drops to one
    CHECK(s.modules[0].second.pres.cover.gen_degrees == std::vector<int>{0});

    CHECK(mentions_position(err_of(
        "ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2,y^2]; }\n"
        "module M over R { gens=[0,1]; rels=[[x,y]]; }")));  // inhomogeneous column
    CHECK(mentions_position(err_of(
        "ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2,y^2]; }\n"
        "module M over R { gens=[0]; rels=[[x,y]]; }")));  // column length
}

TEST_CASE("canonical text round-trips and ignores formatting") {
    std::string a =
        "ring R { char=32003; vars=[x:1,y:1]; ideal=[y^2,x^2]; }\n"
        "module M over R { gens=[1]; rels=[[x*y]]; }\n"
        "task t1 { kind=koszul; ring=R; T=4; }\n"
        "task t2 { kind=betti; ring=R; module=M; T=6; }\n";
    std::string b =
        "# same session, different layout and generator order\n"
        "ring   R{char=32003;vars=[x:1,y:1];\n"
        "  ideal=[x^2,  y^2];}\n"
        "task t1{kind=koszul;T=4;ring=R;}\n"
        "module M over R{gens=[1];rels=[[x*y]];}\n"
        "task t2{kind=betti;module=M;T=6;ring=R;}\n";
    SessionIR sa = parse_session(a);
    SessionIR sb = parse_session(b);
    CHECK(canonical_session(sa) == canonical_session(sb));

    // reparsing the canonical form is a fixed point
    SessionIR sc = parse_session(canonical_session(sa));
    CHECK(canonical_session(sc) == canonical_session(sa));
}

TEST_CASE("hash is stable and input-sensitive") {
    std::string a = "ring R { char=32003; vars=[x:1]; ideal=[x^2]; }";
    std::string b = "ring R { char=32003; vars=[x:1]; ideal=[x^3]; }";
    auto ha = sha256_hex(canonical_session(parse_session(a)));
    CHECK(ha == sha256_hex(canonical_session(parse_session(a))));
    CHECK(ha != sha256_hex(canonical_session(parse_session(b))));
    CHECK(ha.size() == 64);
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("fuzzed inputs never crash") {
    std::mt19937 rng(4242);
    const std::string alphabet =
        "ring module task { } [ ] ( ) = ; : , ^ * + - x y z k m R M 0 1 2 9 32003 char "
        "vars ideal gens rels T betti koszul # \n ";
    std::vector<std::string> words;
    for (std::size_t p = 0; p < alphabet.size();) {
        auto q = alphabet.find(' ', p);
        words.push_back(alphabet.substr(p, q - p));
        p = q + 1;
    }
    std::uniform_int_distribution<std::size_t> w(0, words.size() - 1);
    std::uniform_int_distribution<int> len(0, 60);
    std::uniform_int_distribution<int> mode(0, 3);
    for (int t = 0; t < 500; ++t) {
        std::string text;
        if (mode(rng) == 0) {
            // mutate a valid session at a random position
            text = "ring R { char=32003; vars=[x:1,y:1]; ideal=[x^2,y^2]; }\n"
                   "task t { kind=betti; ring=R; module=k; T=4; }";
            std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
            text[pos(rng)] = alphabet[pos(rng) % alphabet.size()];
        } else {
            int n = len(rng);
            for (int i = 0; i < n; ++i) text += words[w(rng)];
        }
        try {
            parse_session(text);
        } catch (const input_error&) {
            // expected for malformed text
        }
    }
    CHECK(true);  // reaching here means no crash or foreign exception
}
