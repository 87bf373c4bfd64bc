// Generated by tools/oracles/generate.py -- do not edit by hand.
// Reference values computed with mpmath (40 significant digits)
// by methods independent of the library implementation.
#pragma once
#include <complex>

namespace frozen {

using C = std::complex<double>;

struct BesselRef { int n; C z; C value; };

inline constexpr BesselRef kBesselJ[] = {
    {0, {0.50000000000000000000, 0.0}, {0.93846980724081290423, 0.0}},
    {0, {2.4048255576957728863, 0.0}, {-6.1087652597367303971e-17, 0.0}},
    {1, {3.2000000000000001776, 1.1000000000000000888}, {0.33176857331573433592, -0.52197538686809543237}},
    {2, {7.0000000000000000000, -2.0000000000000000000}, {-1.0010909762602017002, -0.33152853051225807755}},
    {0, {12.000000000000000000, 2.0000000000000000000}, {0.24503546174613596529, 0.79523917299901094282}},
    {5, {18.000000000000000000, 3.0000000000000000000}, {-1.3131437410728931137, 1.0918345210725743874}},
    {10, {25.000000000000000000, 2.0000000000000000000}, {-0.22588624068822232012, 0.46093688853189185299}},
    {10, {70.000000000000000000, 5.0000000000000000000}, {-4.4764982952607413322, 5.0537099568419377104}},
    {0, {100.00000000000000000, 0.0}, {0.019985850304223122424, 0.0}},
    {1, {300.00000000000000000, 30.000000000000000000}, {-178550537726.35206556, -168492520070.24514858}},
    {0, {1000.0000000000000000, 5.0000000000000000000}, {1.8385277803341526815, -0.35453167526963475448}},
    {3, {0.0, 14.000000000000000000}, {0.0, -92820.619159050673195}},
    {3, {-20.000000000000000000, 0.50000000000000000000}, {0.11217707311443358020, -0.075638629327006813111}},
    {0, {-17.000000000000000000, -0.40000000000000002220}, {-0.18315098858540985645, 0.040218404059870978093}},
    {6, {-40.000000000000000000, 1.1999999999999999556}, {0.089393762825905395875, -0.17275691102584620874}},
};

inline constexpr BesselRef kHankel1[] = {
    {0, {0.29999999999999998890, 0.0}, {0.97762624653829608922, -0.80727357780451949121}},
    {1, {0.29999999999999998890, 0.0}, {0.14831881627310400238, -2.2931051383885291231}},
    {0, {5.0000000000000000000, 1.0000000000000000000}, {-0.074950603718746033278, -0.10514008697726819877}},
    {1, {5.0000000000000000000, 1.0000000000000000000}, {-0.11458819503238054742, 0.066820584556261076224}},
    {2, {9.0000000000000000000, 4.0000000000000000000}, {0.0015834270751613756474, -0.0048077414308357203235}},
    {5, {22.000000000000000000, 8.0000000000000000000}, {0.000029768827135333965255, 0.000059956857838379695466}},
    {0, {18.477590650225735123, -7.6536686473017954346}, {214.09105828366955051, -310.33100667999390207}},
    {1, {28.284271247461900976, -28.284271247461900976}, {88441444064.535231165, 224017129517.46048276}},
    {1, {150.00000000000000000, 40.000000000000000000}, {-2.6959971859582008382e-19, 3.7723163965341183620e-20}},
    {0, {2000.0000000000000000, 10.000000000000000000}, {3.2411887461286151370e-7, 7.4230984004714549881e-7}},
    {1, {-19.000000000000000000, 0.80000000000000004441}, {-0.048921834764066322644, 0.066209001052487155891}},
    {2, {-22.000000000000000000, -1.5000000000000000000}, {0.65757987900719141728, 0.41282148524438628848}},
};

inline constexpr BesselRef kHankel1Scaled[] = {
    {0, {20.000000000000000000, 0.40000000000000002220}, {0.12404520065883462588, -0.12813899337675756748}},
    {1, {20.000000000000000000, 0.40000000000000002220}, {-0.12514632612487425517, -0.12734427687214631621}},
    {0, {300.00000000000000000, 6.0000000000000000000}, {0.032228969505901588685, -0.032907398223579555689}},
    {1, {300.00000000000000000, 6.0000000000000000000}, {-0.032854848804317983190, -0.032284909829972014398}},
    {0, {3000.0000000000000000, 60.000000000000000000}, {0.010195678214198250963, -0.010402497370503467972}},
    {1, {3000.0000000000000000, 60.000000000000000000}, {-0.010400833581377774834, -0.010197445378154098487}},
    {2, {45.000000000000000000, 3.0000000000000000000}, {-0.084965011205774878028, 0.083594048031135391530}},
    {0, {-25.000000000000000000, 1.0000000000000000000}, {-0.10990879230787114046, -0.11553924591346887422}},
    {1, {-25.000000000000000000, -2.0000000000000000000}, {0.11136015667193322972, -0.11578358636086666838}},
    {2, {-28.000000000000000000, 0.0}, {0.11365164812787839999, 0.099368959643118560022}},
    {0, {2.0000000000000000000, 5.0000000000000000000}, {0.061264816893170847962, -0.33135197676384759409}},
    {1, {2.0000000000000000000, 5.0000000000000000000}, {-0.35702010538876575346, -0.076999425059873946907}},
    {1, {-3.0000000000000000000, 4.0000000000000000000}, {-0.35368364461393579792, 0.13337253398061943316}},
    {3, {11.000000000000000000, 11.000000000000000000}, {0.20614308161443815346, 0.13575000818823639726}},
    {1, {0.50000000000000000000, 3.2000000000000001776}, {-0.48822860043135670264, -0.044743588601458276518}},
    {0, {2.0000000000000000000, -5.0000000000000000000}, {0.34483253203483607285, -0.070229625230168021197}},
    {1, {-3.0000000000000000000, -4.0000000000000000000}, {0.089202541135949289596, -0.32361574501495587430}},
    {3, {11.000000000000000000, -11.000000000000000000}, {0.030487465707567770145, 0.16293551960828829361}},
};

inline constexpr BesselRef kHankel2Scaled[] = {
    {0, {20.000000000000000000, 0.40000000000000002220}, {0.12661262455621246001, 0.12566581274565368028}},
    {1, {20.000000000000000000, 0.40000000000000002220}, {-0.12247853236053025883, 0.12972883105259893121}},
    {0, {300.00000000000000000, 6.0000000000000000000}, {0.032881088013875481094, 0.032256907416355922393}},
    {1, {300.00000000000000000, 6.0000000000000000000}, {-0.032201095796994184598, 0.032933779695526810339}},
    {0, {3000.0000000000000000, 60.000000000000000000}, {0.010401665363491297976, 0.010196561694400862052}},
    {1, {3000.0000000000000000, 60.000000000000000000}, {-0.010194794937450882499, 0.010403329602497170036}},
    {2, {45.000000000000000000, 3.0000000000000000000}, {-0.089848748079161279363, -0.077317346656077672370}},
    {0, {-25.000000000000000000, 1.0000000000000000000}, {0.13498426225835802768, -0.073117290559136254456}},
    {1, {-25.000000000000000000, -2.0000000000000000000}, {-0.11561789774355657665, -0.10996195021090333661}},
    {2, {-28.000000000000000000, 0.0}, {-0.20393943008850888618, -0.18874849119869506664}},
    {0, {2.0000000000000000000, 5.0000000000000000000}, {0.34483253203483607285, 0.070229625230168021197}},
    {1, {2.0000000000000000000, 5.0000000000000000000}, {-0.050655382887617439263, 0.31665103391092638130}},
    {1, {-3.0000000000000000000, 4.0000000000000000000}, {0.089202541135949289596, 0.32361574501495587430}},
    {3, {11.000000000000000000, 11.000000000000000000}, {0.030487465707567770145, -0.16293551960828829361}},
    {1, {0.50000000000000000000, 3.2000000000000001776}, {-0.018776102029551133195, 0.38600580775762811749}},
    {0, {2.0000000000000000000, -5.0000000000000000000}, {0.061264816893170847962, 0.33135197676384759409}},
    {1, {-3.0000000000000000000, -4.0000000000000000000}, {-0.35368364461393579792, -0.13337253398061943316}},
    {3, {11.000000000000000000, -11.000000000000000000}, {0.20614308161443815346, -0.13575000818823639726}},
};

struct PcdRef { C z; C value; };
inline constexpr PcdRef kParabolicCylinder[] = {
    {{0.0, 0.0}, {1.1627366340382371637, 0.0}},
    {{1.0000000000000000000, 0.0}, {0.29459108038275219296, 0.0}},
    {{2.5000000000000000000, 0.0}, {0.0089350664332513717937, 0.0}},
    {{4.0000000000000000000, 0.0}, {0.000037919788866964599946, 0.0}},
    {{-1.5000000000000000000, 0.0}, {3.2315200949522727092, 0.0}},
    {{1.0000000000000000000, 1.0000000000000000000}, {-0.058099548597505670539, -0.42682496678698217184}},
    {{-0.35355339059327376220, 0.35355339059327376220}, {1.6036974343946034318, -0.49339378461327835618}},
    {{-1.4142135623730950488, 1.4142135623730950488}, {3.5848110171387292908, -1.9353782519681087309}},
    {{-2.1213203435596425732, 2.1213203435596425732}, {4.6362350970117720189, -1.8093594022935233667}},
};

inline constexpr PcdRef kParabolicCylinderRatioHalf[] = {
    {{1.0606601717798212866, -1.0606601717798212866}, {1.7065548401541896218, -0.82102901694780930611}},
    {{0.0, 0.0}, {1.0460496200531016490, 0.0}},
    {{-1.0606601717798212866, 1.0606601717798212866}, {0.40098713856916790487, 0.37498670349097247165}},
};

inline constexpr C kAsymptoticP = {-0.81082830489029038313, 0.36116099897890970668};

struct SurfaceRef { double y; C total; };
inline constexpr SurfaceRef kSurfaceTotal[] = {
    {0.001, {1.0007646370263239969, -0.0030219170961449543601}},
    {0.01, {1.0069714906358710821, -0.019227925860260347899}},
    {0.05, {1.0295489331390727803, -0.062096435268172154648}},
    {0.1, {1.0530643524572761582, -0.098979108783382017213}},
    {0.2, {1.0932354357681265397, -0.15372374658948949957}},
    {0.3, {1.1285781767522031320, -0.19624769002761561555}},
    {0.5, {1.1917108630183753554, -0.26251002959829867115}},
    {0.75, {1.2628231519985513502, -0.32497412797620101189}},
    {1.0, {1.3288977725460103638, -0.37309086993217293547}},
    {1.5, {1.4515635707291733198, -0.44016110386217719756}},
    {2.0, {1.5646997682732334827, -0.47871873154947639293}},
    {3.0, {1.7641181317150080980, -0.49405332373407094148}},
    {4.0, {1.9231069505316247905, -0.45038908332385321461}},
    {5.0, {2.0360406948659996818, -0.37003308559449633851}},
    {6.5, {2.1171985036952243294, -0.22413454987455924368}},
    {8.0, {2.1094227468273860688, -0.097048049152222188480}},
    {10.0, {2.0262406854517301983, -0.012566062096361333642}},
    {12.0, {1.9494567528058398103, -0.026531170255692083720}},
    {14.0, {1.9361048404644102892, -0.082618703436748927722}},
    {16.0, {1.9789748064277365411, -0.11500719737331404051}},
    {18.0, {2.0297346563266502692, -0.096058868017777824779}},
    {20.0, {2.0451496552444969613, -0.046713448323411715163}},
    {50.0, {1.9850499580045825862, -0.010068433451894075977}},
    {100.0, {1.9931804116564230812, -0.0042363494887607505110}},
    {200.0, {1.9974414800479519390, -0.0013568862002489538472}},
    {400.0, {1.9998100394495708355, -0.00028560050459932016263}},
};

struct OffSurfaceRef { double y; double rho; C usc; };
inline constexpr OffSurfaceRef kOffSurface[] = {
    {50.0, 1.5, {0.54884677427511804650, -0.068562284156908690171}},
    {50.0, 2.5, {0.0023879559702815039455, 0.0070977604674480733559}},
    {100.0, 1.9, {0.11047046640060701763, -0.14790351528232495437}},
    {100.0, 2.0, {0.082852435413551066109, 0.0030417539508782073628}},
    {100.0, 2.1, {0.030146264636521396864, 0.021057730345920082340}},
};

// spindle(alpha=0.1, 0, 4), k = 300 + 3i, x* = 2.3, x = 1.1
struct ModalKernelRef { int n; C value; };
inline constexpr ModalKernelRef kModalKernel[] = {
    {0, {0.63871907540661793300, 1.9941114409679185240}},
    {1, {-1.9628388986220779917, -1.8890596619409210937}},
    {3, {-1.6968124865003128579, -1.9526450273654363439}},
};

// same profile and k, x* = 2.3, phi* = 0.7, x = 1.1, phi = 0.4
inline constexpr C kKernelFull = {-1.4843755501797155875, -0.77261617893944800583};

// incidence projection: k = 100, theta = 0.05, cone alpha = 0.1, x = 10
struct IncidentRef { int n; C value; };
inline constexpr IncidentRef kIncidentModal[] = {
    {0, {-0.056000233484609437379, 0.16853660442451842858}},
    {1, {-0.31086756319606782682, -0.10329302753674557340}},
    {2, {-0.014683022469911208020, 0.044189579146091297851}},
    {5, {0.24781836175815951933, 0.082343453919802643797}},
    {-2, {-0.014683022469911208020, 0.044189579146091297851}},
};

// manufactured modal set on spindle(0.1, 0, 4), k = 300 + 1.5i:
//   U_n(x) = (1 + 0.2 n + 0.1i) e^{0.3 i n x} sin(pi x / 4),  n = -2..2
// directivity at theta* = 0.04, phi* = 0.6 (2-D quadrature reference)
inline constexpr C kDirectivityRef = {0.032229488182879600004, 0.076060682112819853020};
// scattered field reconstructed at (x, r, phi) = (5, 0.9, 0.7)
inline constexpr C kReconstructRef = {0.047652378594774020210, 0.0062783406771758620220};

inline constexpr C kFresnel = {0.62665706865775012560, 0.62665706865775012560};

} // namespace frozen
