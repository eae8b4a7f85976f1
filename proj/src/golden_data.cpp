#include "gbe/golden.hpp"

namespace gbe {

namespace {

SpectralExpr W(const char* pLow, int sLow, const char* pHigh, int sHigh) {
  return SpectralExpr::term(parsePoly(pLow), sLow) + SpectralExpr::term(parsePoly(pHigh), sHigh);
}

MomentPoly momentFromPoly(int p, const MultiPoly& poly) {
  MomentPoly m;
  m.p = p;
  for (const auto& [mono, c] : poly.terms()) {
    for (int s = 0; s < kAlphabet; ++s)
      if (s != kSlotN && s != kSlotK && mono.e[s] != 0)
        throw std::logic_error("golden moment: unexpected variable");
    m.coef[{mono.e[kSlotN], mono.e[kSlotK]}] = c;
  }
  return m;
}

SmoothedDensity density(int l, const char* bulkNumer, int e,
                        std::vector<std::tuple<int, int, int, Rational>> deltas) {
  // deltas entries: (j, hExp, halfG, coefficient)
  SmoothedDensity d;
  d.l = l;
  d.bulk.push_back({parsePoly(bulkNumer), e});
  std::map<int, EdgeCoeff> byJ;
  for (auto& [j, hExp, halfG, c] : deltas) byJ[j] += EdgeCoeff::term(c, hExp, halfG);
  for (auto& [j, coef] : byJ) d.delta.push_back({j, coef});
  return d;
}

}  // namespace

const std::vector<SpectralExpr>& goldenResolvent() {
  static const std::vector<SpectralExpr> ws = [] {
    std::vector<SpectralExpr> v;
    v.push_back(W("1/2*x", 0, "-1/2", -1));
    v.push_back(W("1/2*h", 1, "-1/2*h*x", 2));
    v.push_back(W("h^2*(x^2+g)+g", 5, "-h^2*x", 4));
    v.push_back(W("5*h^3*(x^2+g)+1/2*h*(x^2+6*g)", 7,
                  "-5*h^3*(x^3+2*g*x)-1/2*h*(x^3+30*g*x)", 8));
    v.push_back(W("-h^4*(37*x^3+92*g*x)-1/2*h^2*(23*x^3+180*g*x)", 10,
                  "h^4*(37*x^4+123*g*x^2+21*g^2)+1/2*h^2*(23*x^4+454*g*x^2+176*g^2)"
                  "+21*g*(x^2+g)", 11));
    v.push_back(W("h^5*(353*x^4+1527*g*x^2+399*g^2)+1/2*h^3*(445*x^4+4332*g*x^2+1512*g^2)"
                  "+1/2*h*21*(x^4+20*g*x^2+14*g^2)", 13,
                  "-h^5*(353*x^5+1766*g*x^3+848*g^2*x)-1/2*h^3*(445*x^5+7714*g*x^3+7440*g^2*x)"
                  "-3/2*h*(7*x^5+628*g*x^3+1200*g^2*x)", 14));
    v.push_back(W("-h^6*(4081*x^5+26392*g*x^3+18976*g^2*x)"
                  "-1/2*h^4*(8567*x^5+101288*g*x^3+93600*g^2*x)"
                  "-h^2*(618*x^5+13104*g*x^3+18000*g^2*x)", 16,
                  "h^6*(4081*x^6+28625*g*x^4+26832*g^2*x^2+1738*g^3)"
                  "+1/2*h^4*(8567*x^6+147556*g*x^4+243180*g^2*x^2+31236*g^3)"
                  "+h^2*(618*x^6+32043*g*x^4+91299*g^2*x^2+16834*g^3)"
                  "+11*g*(135*x^4+558*g*x^2+158*g^2)", 17));
    return v;
  }();
  return ws;
}

const std::vector<SmoothedDensity>& goldenDensities() {
  static const std::vector<SmoothedDensity> ds = [] {
    using T = std::tuple<int, int, int, Rational>;
    std::vector<SmoothedDensity> v;
    v.push_back(density(0, "1/2", 1, {}));
    v.push_back(density(1, "1/2*h", -1, {T{0, 1, 0, Rational(-1, 4)}}));
    v.push_back(density(2, "h^2*(x^2+g)+g", -5, {T{1, 2, -1, Rational(1, 8)}}));
    v.push_back(density(3, "-5*h^3*(x^2+g)-1/2*h*(x^2+6*g)", -7,
                        {T{1, 3, -3, Rational(-5, 512)}, T{2, 3, -2, Rational(-5, 256)},
                         T{3, 3, -1, Rational(-5, 128)}, T{1, 1, -3, Rational(13, 1024)},
                         T{2, 1, -2, Rational(13, 512)}, T{3, 1, -1, Rational(17, 768)}}));
    v.push_back(density(
        4,
        "-h^4*(37*x^4+123*g*x^2+21*g^2)-1/2*h^2*(23*x^4+454*g*x^2+176*g^2)-21*g*(x^2+g)", -11,
        {T{1, 4, -5, Rational(-1, 2048)}, T{2, 4, -4, Rational(-1, 1024)},
         T{3, 4, -3, Rational(-1, 96)}, T{4, 4, -2, Rational(-15, 768)},
         T{1, 2, -5, Rational(-39, 4096)}, T{2, 2, -4, Rational(-39, 2048)},
         T{3, 2, -3, Rational(-7, 384)}, T{4, 2, -2, Rational(-17, 1536)}}));
    v.push_back(density(
        5,
        "h^5*(353*x^4+1527*g*x^2+399*g^2)+1/2*h^3*(445*x^4+4332*g*x^2+1512*g^2)"
        "+1/2*h*(21*x^4+420*g*x^2+294*g^2)", -13,
        {T{1, 5, -7, Rational(425, 524288)},  T{2, 5, -6, Rational(425, 262144)},
         T{3, 5, -5, Rational(159, 49152)},   T{4, 5, -4, Rational(847, 196608)},
         T{5, 5, -3, Rational(705, 491520)},  T{6, 5, -2, Rational(-1695, 737280)},
         T{1, 3, -7, Rational(3019, 1048576)}, T{2, 3, -6, Rational(3019, 524288)},
         T{3, 3, -5, Rational(157, 98304)},   T{4, 3, -4, Rational(-1763, 393216)},
         T{5, 3, -3, Rational(-5837, 983040)}, T{6, 3, -2, Rational(-5677, 1474560)},
         T{1, 1, -7, Rational(-1533, 524288)}, T{2, 1, -6, Rational(-1533, 262144)},
         T{3, 1, -5, Rational(-327, 49152)},  T{4, 1, -4, Rational(-1083, 196608)},
         T{5, 1, -3, Rational(-1533, 491520)}, T{6, 1, -2, Rational(-717, 737280)}}));
    v.push_back(density(
        6,
        "h^6*(4081*x^6+28625*g*x^4+26832*g^2*x^2+1738*g^3)"
        "+1/2*h^4*(8567*x^6+147556*g*x^4+243180*g^2*x^2+31236*g^3)"
        "+h^2*(618*x^6+32043*g*x^4+91299*g^2*x^2+16834*g^3)"
        "+1485*g*x^4+6138*g^2*x^2+1738*g^3", -17,
        {T{1, 6, -9, Rational(161, 2097152)},   T{2, 6, -8, Rational(161, 1048576)},
         T{3, 6, -7, Rational(1197, 1572864)},  T{4, 6, -6, Rational(259, 196608)},
         T{5, 6, -5, Rational(1849, 983040)},   T{6, 6, -4, Rational(6075, 2949120)},
         T{7, 6, -3, Rational(11865, 10321920)},
         T{1, 4, -9, Rational(7987, 4194304)},  T{2, 4, -8, Rational(7987, 2097152)},
         T{3, 4, -7, Rational(27543, 3145728)}, T{4, 4, -6, Rational(4889, 393216)},
         T{5, 4, -5, Rational(20683, 1966080)}, T{6, 4, -4, Rational(34305, 5898240)},
         T{7, 4, -3, Rational(39739, 20643840)},
         T{1, 2, -9, Rational(10731, 2097152)}, T{2, 2, -8, Rational(10731, 1048576)},
         T{3, 2, -7, Rational(17679, 1572864)}, T{4, 2, -6, Rational(1737, 196608)},
         T{5, 2, -5, Rational(5007, 983040)},   T{6, 2, -4, Rational(6033, 2949120)},
         T{7, 2, -3, Rational(5019, 10321920)}}));
    return v;
  }();
  return ds;
}

const std::vector<MomentPoly>& goldenMoments() {
  static const std::vector<MomentPoly> ms = [] {
    const char* tbl[] = {
        "N",
        "N^2+N*(-1+k)",
        "2*N^3+5*N^2*(-1+k)+N*(3-5*k+3*k^2)",
        "5*N^4+22*N^3*(-1+k)+N^2*(32-54*k+32*k^2)+N*(-15+32*k-32*k^2+15*k^3)",
        "14*N^5+93*N^4*(-1+k)+N^3*(234-398*k+234*k^2)+N^2*(-260+565*k-565*k^2+260*k^3)"
        "+N*(105-260*k+331*k^2-260*k^3+105*k^4)",
        "42*N^6+386*N^5*(-1+k)+10*N^4*(145-248*k+145*k^2)+550*N^3*(-5+11*k-11*k^2+5*k^3)"
        "+N^2*(2589-6545*k+8395*k^2-6545*k^3+2589*k^4)"
        "+N*(-945+2589*k-3795*k^2+3795*k^3-2589*k^4+945*k^5)",
        "132*N^7+1586*N^6*(-1+k)+N^5*(8178-14046*k+8178*k^2)"
        "+N^4*(-22950+50945*k-50945*k^2+22950*k^3)"
        "+4*N^3*(9125-23403*k+30173*k^2-23403*k^3+9125*k^4)"
        "+N^2*(-30669+85796*k-127221*k^2+127221*k^3-85796*k^4+30669*k^5)"
        "+3*N*(3465-10223*k+16432*k^2-18853*k^3+16432*k^4-10223*k^5+3465*k^6)",
        "429*N^8-6476*N^7*(-k+1)+28*N^6*(1550*k^2-2671*k+1550)"
        "-14*N^5*(-11865*k^3+26521*k^2-26521*k+11865)"
        "+7*N^4*(55448*k^4-143753*k^3+186048*k^2-143753*k+55448)"
        "-14*N^3*(-39034*k^5+110855*k^4-165733*k^3+165733*k^2-110855*k+39034)"
        "+N^2*(422232*k^6-1270913*k^5+2070257*k^4-2386524*k^3+2070257*k^2-1270913*k+422232)"
        "+N*(135135*k^7-422232*k^6+724437*k^5-906423*k^4+906423*k^3-724437*k^2+422232*k-135135)",
        "1430*N^9-26333*N^8*(-k+1)+4*N^7*(55177*k^2-95339*k+55177)"
        "-14*N^6*(-78040*k^3+175407*k^2-175407*k+78040)"
        "+N^5*(3463634*k^4-9056368*k^3+11756038*k^2-9056368*k+3463634)"
        "+N^4*(7123780*k^5-20466843*k^4+30790276*k^3-30790276*k^2+20466843*k-7123780)"
        "+N^3*(9163236*k^6-27995000*k^5+46050702*k^4-53268136*k^3+46050702*k^2-27995000*k"
        "+9163236)"
        "+N^2*(6633360*k^7-21117210*k^6+36735448*k^5-46305896*k^4+46305896*k^3-36735448*k^2"
        "+21117210*k-6633360)"
        "+3*N*(675675*k^8-2211120*k^7+3984658*k^6-5288076*k^5+5752801*k^4-5288076*k^3"
        "+3984658*k^2-2211120*k+675675)",
        "4862*N^10-106762*N^9*(-k+1)+6*N^8*(181261*k^2-313902*k+181261)"
        "-60*N^7*(-111789*k^3+252415*k^2-252415*k+111789)"
        "+N^6*(27391174*k^4-72116946*k^3+93841930*k^2-72116946*k+27391174)"
        "-6*N^5*(-12684669*k^5+36783020*k^4-55611546*k^3+55611546*k^2-36783020*k+12684669)"
        "+N^4*(142341934*k^6-439988319*k^5+729284620*k^4-845821890*k^3+729284620*k^2"
        "-439988319*k+142341934)"
        "-10*N^3*(-17063718*k^7+55103324*k^6-96859509*k^5+122769969*k^4-122769969*k^3"
        "+96859509*k^2-55103324*k+17063718)"
        "+N^2*(117193185*k^8-390187530*k^7+712745500*k^6-954191664*k^5+1041198895*k^4"
        "-954191664*k^3+712745500*k^2-390187530*k+117193185)"
        "-3*N*(-11486475*k^9+39064395*k^8-73183450*k^7+101351398*k^6-116492293*k^5"
        "+116492293*k^4-101351398*k^3+73183450*k^2-39064395*k+11486475)",
        "16796*N^11-431910*N^10*(-k+1)+10*N^9*(523069*k^2-907571*k+523069)"
        "-15*N^8*(-2605750*k^3+5906423*k^2-5906423*k+2605750)"
        "+8*N^7*(24778268*k^4-65615565*k^3+85554470*k^2-65615565*k+24778268)"
        "-70*N^6*(-10102057*k^5+29519110*k^4-44811613*k^3+44811613*k^2-29519110*k+10102057)"
        "+2*N^5*(890196239*k^6-2777967945*k^5+4632873326*k^4-5384661375*k^3+4632873326*k^2"
        "-2777967945*k+890196239)"
        "-5*N^4*(-618257450*k^7+2019452031*k^6-3579106742*k^5+4556290742*k^4-4556290742*k^3"
        "+3579106742*k^2-2019452031*k+618257450)"
        "+2*N^3*(1750159371*k^8-5906104210*k^7+10901709075*k^6-14692250235*k^5"
        "+16068813521*k^4-14692250235*k^3+10901709075*k^2-5906104210*k+1750159371)"
        "-5*N^2*(-460192905*k^9+1590096591*k^8-3017610500*k^7+4217705240*k^6-4871156831*k^5"
        "+4871156831*k^4-4217705240*k^3+3017610500*k^2-1590096591*k+460192905)"
        "+3*N*(218243025*k^10-766988175*k^9+1483388071*k^8-2122377110*k^7+2533991909*k^6"
        "-2672675165*k^5+2533991909*k^4-2122377110*k^3+1483388071*k^2-766988175*k"
        "+218243025)",
    };
    std::vector<MomentPoly> v;
    for (int p = 0; p <= 10; ++p) v.push_back(momentFromPoly(p, parsePoly(tbl[p])));
    return v;
  }();
  return ms;
}

const std::vector<MultiPoly>& goldenMomentsGUE() {
  static const std::vector<MultiPoly> v = [] {
    std::vector<MultiPoly> r;
    for (const char* s : {"N", "N^2", "N*(2*N^2+1)", "5*N^2*(N^2+2)", "7*N*(2*N^4+10*N^2+3)",
                          "21*N^2*(2*N^4+20*N^2+23)", "33*N*(4*N^6+70*N^4+196*N^2+45)"})
      r.push_back(parsePoly(s));
    return r;
  }();
  return v;
}

const std::vector<MultiPoly>& goldenMomentsGOE() {
  static const std::vector<MultiPoly> v = [] {
    std::vector<MultiPoly> r;
    for (const char* s :
         {"N", "N^2+N", "2*N^3+5*N^2+5*N", "5*N^4+22*N^3+52*N^2+41*N",
          "14*N^5+93*N^4+374*N^3+690*N^2+509*N",
          "42*N^6+386*N^5+2290*N^4+7150*N^3+12143*N^2+8229*N",
          "132*N^7+1586*N^6+12798*N^5+58760*N^4+167148*N^3+258479*N^2+166377*N"})
      r.push_back(parsePoly(s));
    return r;
  }();
  return v;
}

const std::vector<MultiPoly>& goldenMomentsGSE() {
  static const std::vector<MultiPoly> v = [] {
    std::vector<MultiPoly> r;
    for (const char* s :
         {"N", "1/2*(2*N^2-N)", "1/4*(8*N^3-10*N^2+5*N)", "1/8*(40*N^4-88*N^3+104*N^2-41*N)",
          "1/16*(224*N^5-744*N^4+1496*N^3-1380*N^2+509*N)",
          "1/32*(1344*N^6-6176*N^5+18320*N^4-28600*N^3+24286*N^2-8229*N)",
          "1/64*(8448*N^7-50752*N^6+204768*N^5-470080*N^4+668592*N^3-516958*N^2+166377*N)"})
      r.push_back(parsePoly(s));
    return r;
  }();
  return v;
}

}  // namespace gbe
