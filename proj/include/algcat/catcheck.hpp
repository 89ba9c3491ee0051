#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "algcat/loops.hpp"
#include "algcat/neardomain.hpp"
#include "algcat/rps.hpp"
#include "algcat/s2t.hpp"

namespace algcat {

template <class T>
struct Named {
    std::string id;
    T value;
};

/// Outcome of one check. Failing verdicts always carry a witness.
struct Verdict {
    std::string name;
    bool pass = true;
    std::string witness;
    double elapsed_ms = 0.0;
};

/// Exhaustive comparison of a hom-set with its image under a functor.
struct HomSetReport {
    std::string source_id;
    std::string target_id;
    std::size_t source_count = 0;
    std::size_t target_count = 0;
    bool bijection = false;
    std::vector<std::string> images;  ///< induced map, in source hom order
    std::string witness;             ///< set when bijection is false
};

/// The frozen object list every theorem-backed check runs over.
struct Zoo {
    std::vector<Named<Loop>> loops;
    std::vector<Named<Rps>> rps;
    std::vector<Named<Neardomain>> neardomains;
    std::vector<Named<S2tGroup>> groups;
};

/// Loops of order <= 5 and their left-translation r.p.s. (plus two with a
/// relocated base point), GF(q) for q in {2,3,4,5,7,8,9}, the Dickson
/// nearfield, their T2 groups and four relabeled group presentations.
const Zoo& standard_zoo();

enum class FunctorId { F, K, L };

const char* to_string(FunctorId id);

/// Functor data for the law checker. `valid` tells whether a mapped
/// morphism is a morphism between the mapped objects.
template <class Obj, class Mor, class TObj, class TMor>
struct FunctorData {
    std::function<std::vector<Mor>(const Obj&, const Obj&)> homs;
    std::function<Mor(const Obj&)> identity;
    std::function<Mor(const Mor& second, const Mor& first)> compose;
    std::function<TObj(const Obj&)> map_obj;
    std::function<TMor(const Mor&, const Obj& source, const Obj& target)> map_mor;
    std::function<TMor(const TObj&)> target_identity;
    std::function<TMor(const TMor& second, const TMor& first)> target_compose;
    std::function<bool(const TMor&, const TObj&, const TObj&)> valid;
};

namespace detail {

template <class Map>
std::string map_str(const Map& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ']';
    return os.str();
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Identities to identities, images are morphisms, composites to
/// composites, over every composable pair drawn from the enumerated hom-sets.
template <class Obj, class Mor, class TObj, class TMor>
Verdict check_functor_laws(const std::string& name, const std::vector<Named<Obj>>& objects,
                           const FunctorData<Obj, Mor, TObj, TMor>& fd) {
    detail::Stopwatch clock;
    Verdict v{name};
    auto fail = [&](std::string w) {
        v.pass = false;
        v.witness = std::move(w);
        v.elapsed_ms = clock.ms();
        return v;
    };
    const std::size_t n = objects.size();
    std::vector<TObj> images;
    for (const auto& o : objects) images.push_back(fd.map_obj(o.value));
    std::vector<std::vector<std::vector<Mor>>> hom(n, std::vector<std::vector<Mor>>(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (fd.map_mor(fd.identity(objects[a].value), objects[a].value, objects[a].value) !=
            fd.target_identity(images[a]))
            return fail("identity of " + objects[a].id + " is not sent to an identity");
        for (std::size_t b = 0; b < n; ++b) {
            hom[a][b] = fd.homs(objects[a].value, objects[b].value);
            for (const auto& m : hom[a][b])
                if (!fd.valid(fd.map_mor(m, objects[a].value, objects[b].value), images[a], images[b]))
                    return fail("image of a morphism " + objects[a].id + " -> " + objects[b].id +
                                " is not a morphism");
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t i = 0; i < hom[a][b].size(); ++i)
                    for (std::size_t j = 0; j < hom[b][c].size(); ++j) {
                        const auto& m1 = hom[a][b][i];
                        const auto& m2 = hom[b][c][j];
                        const auto lhs = fd.map_mor(fd.compose(m2, m1), objects[a].value, objects[c].value);
                        const auto rhs = fd.target_compose(fd.map_mor(m2, objects[b].value, objects[c].value),
                                                           fd.map_mor(m1, objects[a].value, objects[b].value));
                        if (lhs != rhs)
                            return fail("composite " + objects[a].id + " -> " + objects[b].id + " -> " +
                                        objects[c].id + " (morphisms #" + std::to_string(i) + ", #" +
                                        std::to_string(j) + ") not preserved");
                    }
    v.elapsed_ms = clock.ms();
    return v;
}

FunctorData<Rps, RpsMorphism, Loop, ElementMap> functor_F_data();
FunctorData<S2tGroup, S2tMorphism, Neardomain, ElementMap> functor_K_data();
FunctorData<Neardomain, ElementMap, S2tGroup, S2tMorphism> functor_L_data();

/// F over the r.p.s. of loops of order <= max_order, K over all zoo groups,
/// L over all zoo neardomains.
Verdict check_functor_laws(FunctorId id, const Zoo& zoo, int max_order = 4);

std::string describe(const ElementMap& m);
std::string describe(const RpsMorphism& m);
std::string describe(const S2tMorphism& m);

/// Bijection test between a hom-set and a target hom-set along `map`.
template <class Mor, class TMor, class Map>
HomSetReport compare_homsets(const std::string& source_id, const std::string& target_id,
                             const std::vector<Mor>& source, const std::vector<TMor>& target, Map&& map);

/// F on (r, s): direct r.p.s. hom-set vs loop hom-set of the induced loops.
/// The lift of every target morphism is also checked to be a preimage.
HomSetReport check_full_faithful_F(const Named<Rps>& r, const Named<Rps>& s);

/// K on (g, h): s2t hom-set (direct oracle when both degrees are at most
/// `oracle_degree`, transported otherwise) vs neardomain hom-set of K-images.
HomSetReport check_full_faithful_K(const Named<S2tGroup>& g, const Named<S2tGroup>& h,
                                   int oracle_degree = kDefaultDirectOracleDegree);

/// L on (F1, F2): neardomain hom-set vs direct s2t hom-set of T2 groups.
HomSetReport check_full_faithful_L(const Named<Neardomain>& a, const Named<Neardomain>& b,
                                   int oracle_degree = kDefaultDirectOracleDegree);

/// induced_loop(loop_to_rps(L)) == L.
Verdict check_roundtrip_F(const Named<Loop>& l);

/// K(L(F)) == F on both tables and both constants.
Verdict check_roundtrip_KL(const Named<Neardomain>& f);

/// gamma_g is an s2t morphism L(K(g)) -> g and so is its inverse.
Verdict check_roundtrip_LK(const Named<S2tGroup>& g);

/// (f, phi) o gamma_g == gamma_h o (f_phi, phi), on group elements and points.
Verdict check_naturality(const S2tMorphism& m, const Named<S2tGroup>& g, const Named<S2tGroup>& h);

/// A subgroup, J^2 subgroup and K(g) nearfield agree, with `a_set` standing
/// in for A.
Verdict check_nearfield_criterion(const Named<S2tGroup>& g, const PermSet& a_set);

/// Nearfield criterion on every zoo group, A a subgroup on every T2 of a zoo
/// nearfield, and K_A o L_A the identity there.
Verdict check_equivalence_restriction(const Zoo& zoo);

/// An s2t isomorphism g -> h exists iff a neardomain isomorphism K(g) -> K(h) does.
Verdict check_isomorphism_reflection(const Named<S2tGroup>& g, const Named<S2tGroup>& h);

/// Fixpoint dichotomy and characteristic(g) == Two iff 1+1 = 0 in K(g).
Verdict check_characteristic_coherence(const Named<S2tGroup>& g);

/// The acceptance battery: one verdict per criterion, in order.
std::vector<Verdict> run_acceptance(const Zoo& zoo);

// ---------------------------------------------------------------------------

template <class Mor, class TMor, class Map>
HomSetReport compare_homsets(const std::string& source_id, const std::string& target_id,
                             const std::vector<Mor>& source, const std::vector<TMor>& target, Map&& map) {
    HomSetReport r{source_id, target_id, source.size(), target.size()};
    std::vector<TMor> images;
    for (const auto& m : source) images.push_back(map(m));
    for (const auto& img : images) r.images.push_back(describe(img));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j]) {
                r.witness = "not faithful: source morphisms #" + std::to_string(i) + " and #" + std::to_string(j) +
                            " both map to " + r.images[i];
                return r;
            }
    for (std::size_t i = 0; i < images.size(); ++i)
        if (std::find(target.begin(), target.end(), images[i]) == target.end()) {
            r.witness = "image " + r.images[i] + " is not in the target hom-set";
            return r;
        }
    for (const auto& t : target)
        if (std::find(images.begin(), images.end(), t) == images.end()) {
            r.witness = "not full: " + describe(t) + " has no preimage";
            return r;
        }
    r.bijection = true;
    return r;
}

}  // namespace algcat
