#include "lgtoric/fixtures.hpp"

namespace lgtoric::fixtures {

LatticePolytope delta_p3() { return convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }

LatticePolytope octahedron()
{
    return convex_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

LatticePolytope cube()
{
    std::vector<LatticePoint> pts;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1})
                pts.push_back({a, b, c});
    return convex_hull(pts);
}

LatticePolytope square_pyramid()
{
    return convex_hull({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {-1, -1, -2}});
}

LatticePolytope triangle_prism()
{
    return convex_hull({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {1, 0, -1}, {0, 1, -1}, {-1, -1, -1}});
}

LatticePolytope diamond_prism()
{
    return convex_hull({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 0, -1}, {0, 1, -1}, {-1, 0, -1},
                        {0, -1, -1}});
}

ToricData toric_p2()
{
    ToricData d;
    d.rays = {{1, 0}, {0, 1}, {-1, -1}};
    d.relations = {{1, 1, 1}};
    d.parameters = {ParamMonomial::variable(0)};
    return d;
}

ToricData toric_p1xp1()
{
    ToricData d;
    d.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    d.relations = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    d.parameters = {ParamMonomial::variable(0), ParamMonomial::variable(1)};
    return d;
}

ToricData toric_p3()
{
    ToricData d;
    d.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    d.relations = {{1, 1, 1, 1}};
    d.parameters = {ParamMonomial::variable(0)};
    return d;
}

ToricData toric_s7()
{
    ToricData d;
    d.rays = {{0, 1}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
    d.relations = {{1, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 0, 0, 1}};
    d.parameters = {ParamMonomial{{1, 1}}, ParamMonomial{{1}}, ParamMonomial{{1, 0, 1}}};
    return d;
}

const std::vector<FamilyIdentity>& family_identities()
{
    static const std::vector<FamilyIdentity> all{
        {"2-1", "(x+y+1)^6*(z+1)/(x*y^2)+1/z", {"a1", "b1", "b2"},
         {"1/b1-1/(b1^2*b2)-1", "1/(b1^2*b2)", "1/a1-1"},
         "(1-a1)*b2^3 = ((1-a1)*lambda-a1)*a1*(b1*b2-b1^2*b2-1)",
         "a1*(a1-1)*(b1^2*b2-b1*b2+1)"},
        {"2-2", "(x+y+z+1)^2/x+(x+y+z+1)^4/(y*z)", {"a", "b", "c"},
         {"a*b", "b*c", "c-a*b-b*c-1"},
         "a*c^3 = (c-a*b-b*c-1)*(lambda*a*b-c^2)",
         "-a*b*(a*b+b*c-c+1)"},
        {"2-3", "(x+y+1)^4*(z+1)/(x*y*z)+z+1", {"a", "b", "c"},
         {"a*c", "a-a*c-1", "b/c-1"},
         "a^3*b = (lambda*c-b)*(b-c)*(a-a*c-1)",
         "-c*(b-c)*(a*c-a+1)"},
        {"9-1", "x+1/x+(y+z+1)^4/(y*z)", {"a", "b", "c"},
         {"c/b", "a*c", "a-a*c-1"},
         "a^3*b = (lambda*b*c-b^2-c^2)*(a-a*c-1)",
         "-b*c*(a*c-a+1)"},
        {"10-1", "(x+y+1)^6/(x*y^2)+z+1/z", {"a1", "b1", "b2"},
         {"1/b1-1/(b1^2*b2)-1", "1/(b1^2*b2)", "a1"},
         "a1*b2^3 = (lambda*a1-a1^2-1)*(b1*b2-b1^2*b2-1)",
         "-a1*(b1^2*b2-b1*b2+1)"},
    };
    return all;
}

const FamilyIdentity& family_identity(const std::string& name)
{
    for (const auto& f : family_identities())
        if (f.name == name)
            return f;
    throw DomainError("unknown identity fixture '" + name + "' (expected 2-1, 2-2, 2-3, 9-1 or 10-1)");
}

} // namespace lgtoric::fixtures
