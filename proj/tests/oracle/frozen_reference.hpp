#pragma once
// Generated by make_reference.py; do not edit.

#include <complex>
#include <vector>

namespace reference {

using cplx = std::complex<double>;

inline constexpr double t221_error = 0.28699205879835155;
inline const std::vector<cplx> t221_cograd_conj_1 = {{-0.012801467615821797, 0.008228361031012536}, {0.015530760066826693, 0.002034061079052544}, {0.004327139088375788, -0.013336322609816863}, {-0.012068285220139498, 0.007964971832342113}};
inline const std::vector<cplx> t221_h_ww_1 = {{0.0008754084412078204, 0.0}, {-0.0005606197904070872, 0.0004880151583569235}, {-0.0006289035457504983, -0.0005156309644521679}, {0.0006978607286300563, -8.17704298168213e-06}, {-0.0005606197904070872, -0.0004880151583569235}, {0.000968103669852638, 0.0}, {0.00011335990443271951, 0.0006665365327543149}, {-0.0006585896597642139, -0.000583613925383092}, {-0.0006289035457504983, 0.0005156309644521679}, {0.00011335990443271951, -0.0006665365327543149}, {0.000756143082520563, 0.0}, {-0.0004868759022335107, 0.00040930861853286955}, {0.0006978607286300563, 8.17704298168213e-06}, {-0.0006585896597642139, 0.000583613925383092}, {-0.0004868759022335107, -0.00040930861853286955}, {0.0008021442747802092, 0.0}};
inline const std::vector<cplx> t221_h_wbar_w_1 = {{0.0014336149088152728, 0.002360497174483234}, {-9.897891680535322e-05, -0.00236703974173997}, {2.488483168001204e-05, 1.551311843494848e-05}, {3.175973619832231e-05, -2.199509529668715e-05}, {-9.897891680535322e-05, -0.00236703974173997}, {-0.0014018109731877347, 0.0017311770444046336}, {3.175973619832231e-05, -2.199509529668715e-05}, {-4.380960238006681e-05, -0.00010793371315760609}, {2.488483168001204e-05, 1.551311843494848e-05}, {3.175973619832231e-05, -2.199509529668715e-05}, {0.002347141071141745, 0.0018403994215778225}, {-0.001103969970074682, -0.002245955152666612}, {3.175973619832231e-05, -2.199509529668715e-05}, {-4.380960238006681e-05, -0.00010793371315760609}, {-0.001103969970074682, -0.002245955152666612}, {-0.0003432418670219913, 0.002495035791232096}};
inline const std::vector<cplx> t221_cograd_conj_2 = {{0.00645018061825227, -0.022322374116061118}, {0.02937981713347988, 0.008639051314199295}};
inline const std::vector<cplx> t221_h_ww_2 = {{0.01508914315489759, 0.0}, {0.012805913209189751, -0.001659377586056564}, {0.012805913209189751, 0.001659377586056564}, {0.01575731795501975, 0.0}};
inline const std::vector<cplx> t221_h_wbar_w_2 = {{0.001648619493036764, 0.0016926878786950397}, {0.0019932465910131136, 0.0005295600056303274}, {0.0019932465910131136, 0.0005295600056303274}, {0.001967459517284887, -0.0005471996298286589}};

inline constexpr double s221_error = 0.2869263370527464;
inline const std::vector<cplx> s221_cograd_conj_1 = {{-0.012775741896515135, 0.008292777627537046}, {0.015535883379563614, 0.0019785139399740776}, {0.004391794115103141, -0.01347368418106828}, {-0.012158674041858924, 0.008044227386432914}};
inline const std::vector<cplx> s221_h_ww_1 = {{0.0008766373576002022, 0.0}, {-0.0005614984804668782, 0.0004882750488968454}, {-0.0006392689331841484, -0.0005185586276319303}, {0.0007061818816991434, -9.703988054493508e-06}, {-0.0005614984804668782, -0.0004882750488968454}, {0.0009682773648254105, 0.0}, {0.00011929879815711056, 0.0006720034426357692}, {-0.0006636923637285067, -0.0005856222986301858}, {-0.0006392689331841484, 0.0005185586276319303}, {0.00011929879815711056, -0.0006720034426357692}, {0.0007737021315309412, 0.0}, {-0.0004988584201844006, 0.00041567673572637606}, {0.0007061818816991434, 9.703988054493508e-06}, {-0.0006636923637285067, 0.0005856222986301858}, {-0.0004988584201844006, -0.00041567673572637606}, {0.0008120268885204432, 0.0}};
inline const std::vector<cplx> s221_h_wbar_w_1 = {{0.001770397206438451, 0.002456875400468404}, {-0.00029373721534846207, -0.0025664301627949175}, {2.5982069324102685e-05, 1.529803971563694e-05}, {3.054916269581219e-05, -2.504687610387117e-05}, {-0.00029373721534846207, -0.0025664301627949175}, {-0.001362069651313976, 0.0019476345049211728}, {3.054916269581219e-05, -2.504687610387117e-05}, {-5.1300049978297224e-05, -0.0001038485138439746}, {2.5982069324102685e-05, 1.529803971563694e-05}, {3.054916269581219e-05, -2.504687610387117e-05}, {0.0028256851523554573, 0.002255823087681603}, {-0.0012904158245919263, -0.002704985363368012}, {3.054916269581219e-05, -2.504687610387117e-05}, {-5.1300049978297224e-05, -0.0001038485138439746}, {-0.0012904158245919263, -0.002704985363368012}, {-0.0003764959383064074, 0.0029236592172037453}};
inline const std::vector<cplx> s221_cograd_conj_2 = {{0.0064634678871275265, -0.02231957177368244}, {0.029411955472249708, 0.008658342109530807}};
inline const std::vector<cplx> s221_h_ww_2 = {{0.01506027930076878, 0.0}, {0.012779877194930893, -0.0016747402555603009}, {0.012779877194930893, 0.0016747402555603009}, {0.01574039366971925, 0.0}};
inline const std::vector<cplx> s221_h_wbar_w_2 = {{0.0017442281527191431, 0.001564710715644125}, {0.0020238182747026713, 0.0003904969936860806}, {0.0020238182747026713, 0.0003904969936860806}, {0.0019381045678326075, -0.0006675585626222289}};

inline const std::vector<cplx> xor_gd_w1 = {{0.3, -0.2}, {-0.5, 0.4}, {0.1, 0.7}, {0.6, -0.1}, {-0.2, 0.3}, {0.4, 0.4}, {-0.6, -0.5}, {0.2, 0.1}};
inline const std::vector<cplx> xor_gd_w2 = {{0.8, 0.2}, {-0.4, -0.6}, {0.5, -0.3}, {-0.1, 0.9}};
inline const std::vector<cplx> xor_gd_w1_after = {{0.2965035913728637, -0.19875058686159391}, {-0.5022320137211918, 0.4000707356841399}, {0.10215694890471291, 0.6984672608556933}, {0.6023241662379326, -0.10064222385515399}, {-0.20255753916674207, 0.29811500863048496}, {0.3983612969350619, 0.3987811752071835}, {-0.5991875263873185, -0.49581985550523194}, {0.19955967523349735, 0.10232634305612977}};
inline const std::vector<cplx> xor_gd_w2_after = {{0.7861230395625353, 0.19930115813973517}, {-0.4155629729752512, -0.598907235560496}, {0.4862127982205553, -0.29858862814144077}, {-0.11156598430336692, 0.8965929442316589}};

}  // namespace reference
