#include <set>
#include <sstream>

#include "doctest.h"
#include "satopo/verify.hpp"

using namespace satopo;

namespace {

VerifyInput poly(const char* s, std::optional<Rat> alpha = std::nullopt) {
    VerifyInput in;
    in.text = s;
    in.poly = parse_poly(s);
    in.alpha = alpha;
    return in;
}

}  // namespace

TEST_CASE("catalog names round trip") {
    std::set<std::string> names;
    for (IdentityId id : all_identities()) {
        std::string n = identity_name(id);
        CHECK(parse_identity(n) == id);
        names.insert(n);
    }
    CHECK(names.size() == 36);
    CHECK(names.count("KH-LOC-FIBER"));
    CHECK(names.count("T4.5-ALL"));
    CHECK(names.count("T5.8"));
    CHECK_THROWS_AS(parse_identity("T9.9"), Error);
    CHECK(uses_alpha(IdentityId::C4_2_FIBER));
    CHECK_FALSE(uses_alpha(IdentityId::SEKALSKI));
    CHECK_FALSE(is_function_identity(IdentityId::T5_6));
}

TEST_CASE("report JSON schema") {
    IdentityReport r = verify(IdentityId::C4_2_FIBER, poly("x^2 + y^2", Rat(-1)));
    auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"identity", "input", "lhs", "rhs", "pass", "witnesses", "skipped_reason"});
    CHECK(j["identity"] == "C4.2-FIBER");
    CHECK(j["lhs"] == "0");
    CHECK(j["rhs"] == "0");
    CHECK(j["pass"] == true);
    CHECK(j["skipped_reason"].is_null());
    CHECK(j["witnesses"].contains("equations"));
}

TEST_CASE("worked examples") {
    IdentityReport s = verify(IdentityId::SEKALSKI, poly("x*(x*y - 1)"));
    CHECK(s.pass());
    CHECK(s.head()->lhs == 0);
    CHECK(s.witnesses["r_inf_at_lambda"][0] == 3);
    VerifyInput disk;
    disk.kind = VerifyInput::Kind::Region;
    disk.text = "x^2 + y^2 - 1";
    disk.poly = parse_poly(disk.text);
    IdentityReport t = verify(IdentityId::T5_6, disk);
    CHECK(t.pass());
    CHECK(t.head()->lhs == 1);
}

TEST_CASE("skipped is not passed") {
    IdentityReport r = verify(IdentityId::T4_5_ALL, poly("x^2*y"));
    CHECK(r.skipped());
    CHECK_FALSE(r.pass());
    CHECK(r.to_json()["skipped_reason"].is_string());
    // the criterion of properness fails for a non-proper function
    IdentityReport p = verify(IdentityId::C3_4, poly("x^3 - 3*x + y^2"));
    CHECK(p.skipped());
    // a function identity on a plane set is an unusable input, not a pass
    VerifyInput c = poly("x^2 + y^2 - 1");
    c.kind = VerifyInput::Kind::Curve;
    IdentityReport m = verify(IdentityId::SEKALSKI, c);
    CHECK(m.skipped());
    CHECK(m.degenerate);
}

TEST_CASE("corpus parsing") {
    std::istringstream ok("# comment\n\npoly: x^2 - y^2 alpha=1/2; seed=3\nregion: y   # half-plane\ncurve: x^2 + y^2 - 1 v=3/5,4/5\n");
    auto in = parse_corpus(ok);
    REQUIRE(in.size() == 3);
    CHECK(in[0].kind == VerifyInput::Kind::Poly);
    CHECK(*in[0].alpha == make_rat(1, 2));
    CHECK(in[0].seed == 3);
    CHECK(in[1].kind == VerifyInput::Kind::Region);
    CHECK(in[2].kind == VerifyInput::Kind::Curve);
    CHECK(in[2].v->x == make_rat(3, 5));

    std::istringstream bad("poly: x\nfoo: y\n");
    try {
        parse_corpus(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_input_line("poly: x alpha"), Error);
    CHECK_THROWS_AS(parse_input_line("poly: x bogus=1"), Error);
    CHECK_THROWS_AS(parse_direction("1/2,1/2"), Error);
}

TEST_CASE("corpus exit codes") {
    std::istringstream good("poly: x^2 + y^2\nregion: x^2 + y^2 - 1\n");
    CorpusResult r = run_corpus(parse_corpus(good));
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
    CHECK(r.exit_code() == 0);
    CHECK(r.summary()["reports"] == r.reports.size());

    std::istringstream constant("poly: 3\n");
    CorpusResult c = run_corpus(parse_corpus(constant));
    CHECK(c.passed == 0);
    CHECK(c.failed == 0);
    CHECK(c.skipped == static_cast<int>(c.reports.size()));
    for (const auto& rep : c.reports) CHECK(rep.skipped());
    CHECK(c.exit_code() == 2);

    // a direction in the bad set: the linear identities are skipped with a reason
    std::istringstream planted("region: y v=0/1,1/1\n");
    CorpusResult b = run_corpus(parse_corpus(planted));
    CHECK(b.failed == 0);
    int bad = 0;
    for (const auto& rep : b.reports)
        if (rep.skipped() && rep.skipped_reason->find("bad set") != std::string::npos) ++bad;
    CHECK(bad == 2);
}

TEST_CASE("random corpus is reproducible and admissible") {
    auto a = random_corpus(7, 5, 3);
    auto b = random_corpus(7, 5, 3);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].total_degree() <= 3);
    }
}

TEST_CASE("closed loop identities on a seeded corpus") {
    using I = IdentityId;
    for (const BPoly& f : random_corpus(5, 6, 3)) {
        VerifyInput in;
        in.poly = f;
        in.text = f.str();
        for (const auto& r : verify_many({I::T3_20, I::T3_21_LE, I::T3_21_GE, I::C3_22, I::T4_4, I::T4_5_ALL}, in)) {
            CAPTURE(identity_name(r.id));
            CAPTURE(in.text);
            CHECK(r.pass());
        }
    }
}

TEST_CASE("verify_many agrees with verify") {
    VerifyInput in = poly("x*(x*y - 1)");
    auto many = verify_many({IdentityId::SEKALSKI, IdentityId::T5_6, IdentityId::T4_4}, in);
    REQUIRE(many.size() == 3);
    CHECK(many[0].pass() == verify(IdentityId::SEKALSKI, in).pass());
    CHECK(many[1].skipped());
    CHECK(many[2].to_json() == verify(IdentityId::T4_4, in).to_json());
}
