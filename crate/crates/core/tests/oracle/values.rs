// Generated by tests/oracle/generate.py (mpmath, 50 digits). Do not edit.
#![allow(dead_code, clippy::excessive_precision, clippy::type_complexity)]

/// (n, x, J_n(x), Y_n(x))
pub const BESSEL_JY: &[(usize, f64, f64, f64)] = &[
    (0, 0.01, 0.99997500015624957, -3.005455637083646),
    (0, 0.1, 0.99750156206604003, -1.5342386513503668),
    (0, 0.5, 0.9384698072408129, -0.44451873350670656),
    (0, 1.0, 0.76519768655796655, 0.088256964215676958),
    (0, 2.404825557695773, -1.2011950073676861e-16, 0.50992438344847905),
    (0, 5.0, -0.1775967713143383, -0.30851762524903378),
    (0, 12.566370614359172, 0.15750739248213829, -0.16066215143974297),
    (0, 24.9, 0.083245968353015682, -0.13649918399676511),
    (0, 25.1, 0.10827567149994929, -0.1167677076380371),
    (0, 50.0, 0.055812327669251815, -0.098064995470077079),
    (0, 100.0, 0.019985850304223122, -0.077244313365083152),
    (0, 333.3, 0.03846665441671844, -0.020745232486427372),
    (0, 1000.0, 0.024786686152420175, 0.0047159179776228134),
    (0, 2500.0, 0.0012370092569681498, -0.015909673533804861),
    (1, 0.01, 0.0049999375002604161, -63.678596282060656),
    (1, 0.1, 0.049937526036241998, -6.458951094702027),
    (1, 0.5, 0.24226845767487389, -1.4714723926702431),
    (1, 1.0, 0.44005058574493352, -0.78121282130028872),
    (1, 2.404825557695773, 0.51914749728946674, 0.10274668243825965),
    (1, 5.0, -0.32757913759146522, 0.14786314339122684),
    (1, 12.566370614359172, -0.15453081558419362, -0.16401349878612043),
    (1, 24.9, -0.13485569953140874, -0.086002557595554442),
    (1, 25.1, -0.11463478413442273, -0.11062223322783083),
    (1, 50.0, -0.097511828125175138, -0.056795668562014768),
    (1, 100.0, -0.077145352014112158, -0.020372312002759793),
    (1, 333.3, -0.020687550206813803, -0.03849781859054379),
    (1, 1000.0, 0.0047283119070895239, -0.024784331292351779),
    (1, 2500.0, -0.015909426450156754, -0.0012401912162878124),
    (2, 0.01, 1.2499895833658854e-5, -12732.713800775048),
    (2, 0.1, 0.0012489586587999188, -127.64478324269017),
    (2, 0.5, 0.030604023458682641, -5.4413708371742657),
    (2, 1.0, 0.11490348493190048, -1.6506826068162544),
    (2, 2.404825557695773, 0.4317548070196804, -0.42447395889734593),
    (2, 5.0, 0.046565116277752216, 0.36766288260552452),
    (2, 12.566370614359172, -0.1821017356423848, 0.13455859237413532),
    (2, 24.9, -0.09407775144790795, 0.12959134804531496),
    (2, 25.1, -0.11740991724771206, 0.10795318706211433),
    (2, 50.0, -0.059712800794258821, 0.095793168727596488),
    (2, 100.0, -0.021528757344505366, 0.076836867125027956),
    (2, 333.3, -0.038590792131730824, 0.020514222473882855),
    (2, 1000.0, -0.024777229528605996, -0.004765486640207517),
    (2, 2500.0, -0.0012497367981282752, 0.01590868138083183),
    (3, 0.01, 2.083320312532552e-8, -5093021.841713737),
    (3, 0.1, 2.0820315754756261e-5, -5099.3323786129049),
    (3, 0.5, 0.0025637299945872441, -42.059494304723883),
    (3, 1.0, 0.019563353982668406, -5.8215176059647288),
    (3, 2.404825557695773, 0.19899990535769085, -0.80878368797318636),
    (3, 5.0, 0.36483123061366699, 0.14626716269319277),
    (3, 12.566370614359172, 0.096566032837995369, 0.20684482900978253),
    (3, 24.9, 0.11974280773254803, 0.10682044483174962),
    (3, 25.1, 0.095924040349926783, 0.12782592837717176),
    (3, 50.0, 0.092734804061634432, 0.064459122060222487),
    (3, 100.0, 0.076284201720331943, 0.023445786687760912),
    (3, 333.3, 0.020224414387651117, 0.038744013879759305),
    (3, 1000.0, -0.0048274208252039479, 0.024765269345790949),
    (3, 2500.0, 0.015907426871279749, 0.0012656451064971433),
    (5, 0.01, 2.6041558159915984e-14, -2444635204829.7114),
    (5, 0.1, 2.6030817909644408e-9, -24461484.502303915),
    (5, 0.5, 8.0536272413574741e-6, -7946.3014788074733),
    (5, 1.0, 0.00024975773021123443, -260.40586662581222),
    (5, 2.404825557695773, 0.016389243204805856, -4.4919848883206281),
    (5, 5.0, 0.26114054612017009, -0.45369482249110188),
    (5, 12.566370614359172, 0.048716086894772776, -0.22963420074040233),
    (5, 24.9, -0.080246762733942249, -0.14018638276614222),
    (5, 25.1, -0.051194170474627872, -0.15249435491003364),
    (5, 50.0, -0.08140024769656964, -0.078548413913081653),
    (5, 100.0, -0.074195736964513921, -0.029480196281661896),
    (5, 333.3, -0.019289404054658733, -0.039219663696209292),
    (5, 1000.0, 0.0050254069452331861, -0.024725956719740691),
    (5, 2500.0, -0.015903305544487367, -0.0013165431667613873),
    (10, 0.01, 2.6911383392363444e-30, -1.1828081905176634e+28),
    (10, 0.1, 2.6905328954342156e-20, -1.1831335132045198e+18),
    (10, 0.5, 2.6131773608228031e-13, -121963623349.56963),
    (10, 1.0, 2.6306151236874532e-10, -121618014.27868919),
    (10, 2.404825557695773, 1.5253656039281568e-6, -21506.373920124453),
    (10, 5.0, 0.0014678026473104741, -25.129110095610097),
    (10, 12.566370614359172, 0.27422806870854676, 0.075080597712484039),
    (10, 24.9, -0.088688801558025489, -0.14154908531382969),
    (10, 25.1, -0.061095034514211922, -0.15461319280028603),
    (10, 50.0, -0.11384784914946939, 0.0057238971820535135),
    (10, 100.0, -0.054732176935472015, 0.058331574236414929),
    (10, 333.3, -0.04114448333833261, 0.014766175016775979),
    (10, 1000.0, -0.024520622306036558, -0.0059490005741626686),
    (10, 2500.0, -0.0015549407373507161, 0.015881816658194675),
    (20, 0.01, 3.9198996830746453e-65, -4.0601794919223916e+62),
    (20, 0.1, 3.9194377208586177e-45, -4.0607084201263722e+42),
    (20, 0.5, 3.7272019617047145e-31, -4.2714301215659064e+28),
    (20, 1.0, 3.8735030085246577e-25, -4.1139703148355053e+22),
    (20, 2.404825557695773, 1.5310874781579117e-17, -1047106375815166.3),
    (20, 5.0, 2.7703300521289417e-11, -593396529.69143207),
    (20, 12.566370614359172, 0.00052682214198199306, -38.935352144247526),
    (20, 24.9, 0.064220993577569435, 0.19556675860860551),
    (20, 25.1, 0.039629272494917334, 0.19979353826068922),
    (20, 50.0, -0.11670435275957974, 0.016442633948115778),
    (20, 100.0, 0.062217458498338753, 0.051247973076188424),
    (20, 333.3, 0.043499656715052634, 0.0046125993500977016),
    (20, 1000.0, 0.023357967932679335, 0.0095473760149873017),
    (20, 2500.0, 0.0025045163179625971, -0.015760185626728389),
    (40, 0.01, 1.1146918875973838e-140, -7.1389659258955353e+137),
    (40, 0.1, 1.1146246002516398e-100, -7.1394189904181123e+97),
    (40, 0.5, 1.0122626959003594e-72, -7.8619604848825331e+69),
    (40, 1.0, 1.1079158511286327e-60, -7.1848747968013843e+57),
    (40, 2.404825557695773, 1.8844176016165677e-45, -4.2305787067319435e+42),
    (40, 5.0, 8.7022416173888181e-33, -9.2168165716493142e+29),
    (40, 12.566370614359172, 3.9122783897742982e-17, -214261195223713.65),
    (40, 24.9, 1.4755652248990823e-6, -6895.0211989807665),
    (40, 25.1, 1.8988933788997429e-6, -5385.5913516042663),
    (40, 50.0, -0.13817628120116143, -0.045308011195609008),
    (40, 100.0, 0.072701754822811057, 0.040746852168803442),
    (40, 333.3, -0.01453383043283029, 0.041385036039160364),
    (40, 1000.0, 0.013889378035385042, 0.021076403331923194),
    (40, 2500.0, 0.0061793598396407894, -0.014713803621376497),
    (60, 0.01, 1.0423779904480547e-220, -5.08948279035784e+217),
    (60, 0.1, 1.0423356980865727e-160, -5.0896962944046695e+157),
    (60, 0.5, 9.0319327113893073e-119, -5.8739908800922681e+115),
    (60, 1.0, 1.0381149765645213e-100, -5.1110927753066711e+97),
    (60, 2.404825557695773, 7.460100951383587e-78, -7.1171051870668528e+74),
    (60, 5.0, 8.1600240380935178e-59, -6.5241072937823727e+55),
    (60, 12.566370614359172, 4.8759582169467691e-35, -1.1127108790494171e+32),
    (60, 24.9, 4.5973043051096897e-18, -1268406915164109.8),
    (60, 25.1, 7.1181123818944768e-18, -820592306987904.36),
    (60, 50.0, 0.0010485195995314181, -9.194397418995578),
    (60, 100.0, 0.0010631563042277031, -0.089194694150377778),
    (60, 333.3, 0.0091107748231716563, -0.043113379626619086),
    (60, 1000.0, -0.010245851850792056, 0.023082270887938173),
    (60, 2500.0, 0.011422615268191689, -0.011146530157953973),
    (100, 0.1, 8.4525165351217421e-289, -3.7658612560192482e+285),
    (100, 0.5, 6.6638999042770852e-219, -4.7766903780417644e+215),
    (100, 1.0, 8.4318287896267085e-189, -3.7752878101105284e+185),
    (100, 2.404825557695773, 1.0693930992411972e-150, -2.9774081938597403e+147),
    (100, 5.0, 6.2677893955418761e-119, -5.0848639160202229e+115),
    (100, 12.566370614359172, 4.7632264028704556e-79, -6.7360558411000039e+75),
    (100, 24.9, 7.504343213823993e-50, -4.3796349025210087e+46),
    (100, 25.1, 1.6286663737874248e-49, -2.019064176240619e+46),
    (100, 50.0, 1.1159273690838093e-21, -3.2938001882026666e+18),
    (100, 100.0, 0.09636667329586156, -0.16692141141757651),
    (100, 333.3, -0.020875550476278152, 0.039579084400120114),
    (100, 1000.0, 0.011676135007802554, -0.022438688257723274),
    (100, 2500.0, 0.013955367586910533, 0.0077523920451972457),
    (200, 12.566370614359172, 4.5055074559860125e-216, -3.5394468912937128e+212),
    (200, 24.9, 6.3303832382282411e-157, -2.533858813138442e+153),
    (200, 25.1, 3.0965796734440627e-156, -5.1806625693515112e+152),
    (200, 50.0, 2.1383690042391174e-97, -7.6869182252789711e+93),
    (200, 100.0, 2.0594424939411679e-41, -8.9236648125530524e+37),
    (200, 333.3, 0.013693303435371603, -0.046905923537242488),
    (200, 1000.0, 0.0041835315250220756, 0.025144488299691111),
    (200, 2500.0, 0.015570086815680451, 0.0036109702070119834),
];

/// (n, x, j_n(x), y_n(x))
pub const SPH_BESSEL_JY: &[(usize, f64, f64, f64)] = &[
    (0, 0.01, 0.99998333341666647, -99.995000041666528),
    (0, 0.5, 0.958851077208406, -1.7551651237807454),
    (0, 1.0, 0.84147098480789651, -0.54030230586813972),
    (0, 5.0, -0.19178485493262769, -0.056732437092645253),
    (0, 12.566370614359172, -7.5905016874417568e-17, -0.079577471545947674),
    (0, 50.0, -0.0052474970740785757, -0.019299320569842265),
    (0, 300.0, -0.003332519466337165, 7.3655397595613142e-5),
    (1, 0.01, 0.0033333000001190474, -10000.499987500069),
    (1, 0.5, 0.16253703063606657, -4.4691813247698969),
    (1, 1.0, 0.30116867893975679, -1.3817732906760362),
    (1, 5.0, -0.095089408079170792, 0.18043836751409864),
    (1, 12.566370614359172, -0.07957747154594768, -0.0063325739776460358),
    (1, 50.0, -0.019404270511323837, 0.0048615106626817304),
    (1, 300.0, 6.2546999374489259e-5, 0.0033327649843291504),
    (2, 0.01, 6.6666190477513226e-6, -3000050.0012499792),
    (2, 0.5, 0.016371106607993413, -25.059922824838636),
    (2, 1.0, 0.062035052011373861, -3.605017566159969),
    (2, 5.0, 0.13473121008512522, 0.16499545760110444),
    (2, 12.566370614359172, -0.018997721932938261, 0.078065680869391466),
    (2, 50.0, 0.0040832408433991455, 0.019591011209603169),
    (2, 300.0, 0.0033331449363309099, -4.0327747752321638e-5),
    (5, 0.01, 9.6199726200342866e-15, -945005250018750.06),
    (5, 0.5, 2.9774668754574456e-6, -61327.563166980636),
    (5, 1.0, 9.2561158611258164e-5, -999.44034339223641),
    (5, 5.0, 0.10681116145650454, -0.32046504674973918),
    (5, 12.566370614359172, -0.029680458650352335, -0.078385961188320999),
    (5, 50.0, -0.020048300563664871, -0.00069711319645853662),
    (5, 300.0, -9.3004660529591486e-5, 0.0033323135399115046),
    (10, 0.01, 7.2730761345037872e-31, -6.5473079797378378e+30),
    (10, 0.5, 7.0641239636618782e-14, -1349739281107.0558),
    (10, 1.0, 7.116552640047313e-11, -672215008.25620844),
    (10, 5.0, 0.00040734424424946043, -26.6561144057187),
    (10, 12.566370614359172, 0.10437138753399001, -0.005695619918387085),
    (10, 50.0, -0.015039221463465961, 0.01352468751115876),
    (10, 300.0, 0.0032910958936502992, 0.00053534584183267616),
    (30, 0.01, 5.6111892403828455e-103, -2.9215631130472479e+102),
    (30, 0.5, 5.2154726081997029e-52, -6.2873106616509012e+49),
    (30, 1.0, 5.5668312669813472e-43, -2.9464285474967825e+40),
    (30, 5.0, 4.2827302172992125e-22, -7.7607175697584788e+18),
    (30, 12.566370614359172, 1.4791084927213264e-10, -9681205.0151662621),
    (30, 50.0, -0.0014946734536051122, -0.022412268120502119),
    (30, 300.0, 0.00013886892252620023, 0.0033391139129935432),
    (60, 0.01, 1.185209694466797e-221, -6.9729963916309493e+220),
    (60, 0.5, 1.0269617590489574e-119, -1.6095526567891584e+117),
    (60, 1.0, 1.1804018719355415e-101, -7.0023544476748844e+98),
    (60, 5.0, 9.2859011103410923e-60, -1.7861141807062566e+56),
    (60, 12.566370614359172, 5.5737973725759374e-36, -1.2062379658445096e+32),
    (60, 50.0, 0.00013397153050962159, -2.199701185857287),
    (60, 300.0, -0.0033110144865149452, 0.00061753434576093732),
];

pub const HANKEL1_1_AT_0_02: (f64, f64) = (0.0099995000083332639, -31.859812792149224);
pub const HANKEL1_0_AT_4PI: (f64, f64) = (0.15750739248213844, -0.16066215143974281);

/// per l: [A, B, P, Q, E, I] as (re, im)
pub const KFE_2PI_R2_L11: &[[(f64, f64); 6]] = &[
    [(0.97094574998508258, 1.0305272057520697), (1.0669135420080374, -0.92746331995299339), (0.0, 0.0), (-0.038632703896048364, -0.041003374696530142), (-6.7036154911758313, 5.8274239048766479), (5.528542595474668, 6.8977216831102055)],
    [(0.070998387770334836, 0.088399293285413718), (0.09105086782119246, -0.067279296187067573), (-0.074131897781215782, -0.085203021339237001), (-0.09105086782119246, 0.067279296187067573), (-0.60445515877435355, 0.37533236669108298), (0.3488965732607526, 0.6161825471566362)],
    [(0.005151158575142338, 0.0075432947258018698), (0.0077348867540312319, -0.0048346024707599157), (-0.011299744365203959, -0.014069184492203786), (-0.014735840141927794, 0.010448175652316591), (-0.053252171773309737, 0.022324706004830982), (0.020029420377104954, 0.05386885158422669)],
    [(0.00037022980703485722, 0.00064075757850887335), (0.00065445910495351675, -0.00034339976083716166), (-0.001289278076686956, -0.0017401070785600693), (-0.0018076318173666748, 0.0011955020013743003), (-0.0046079029910853304, 0.0011357860783622112), (0.00093943152518737714, 0.0046301467649938391)],
    [(2.6303811121881104e-5, 5.4211264056952321e-5), (5.5178659026231942e-5, -2.4038291595211098e-5), (-0.00013048037099069995, -0.0001910738875453123), (-0.00019747619942637463, 0.00012081761464354465), (-0.00039298908028146113, 3.6171720276200025e-5), (1.9578926438732782e-5, 0.00039249366404006997)],
    [(1.841873920425073e-6, 4.5703458782791315e-6), (4.6375456397448367e-6, -1.6512085414549003e-6), (-1.2350830360580395e-5, -1.9647347449931249e-5), (-2.0228918545028393e-5, 1.1396417794988947e-5), (-3.311495127439119e-5, -1.6918918372318457e-6), (-3.0795041781663762e-6, 3.2884861923568312e-5)],
    [(1.2657250916435602e-7, 3.8409629810543539e-7), (3.8866537210873275e-7, -1.1057374162520315e-7), (-1.1194199409170156e-6, -1.9373826662449176e-6), (-1.9886209540715706e-6, 1.0278844839810927e-6), (-2.7617766019476644e-6, -5.1873277264157372e-7), (-6.3372452822239451e-7, 2.7274679056403784e-6)],
    [(8.4808376344626425e-9, 3.2188771089145649e-8), (3.2490414341361348e-8, -7.1419573145328544e-9), (-9.8357187436784423e-8, -1.8554910565798454e-7), (-1.8995913835392531e-7, 8.976701632274722e-8), (-2.2825603659221695e-7, -7.3468213543981023e-8), (-8.2920609953948057e-8, 2.2418695696811554e-7)],
    [(5.4823745326493133e-10, 2.6906838085983383e-9), (2.7097578241035619e-9, -4.3646141113249606e-10), (-8.438576818993746e-9, -1.7391621087896227e-8), (-1.7764099350686875e-8, 7.6458323452440903e-9), (-1.8712275710372865e-8, -8.5370984814260952e-9), (-9.3083703032864884e-9, 1.8276692600235305e-8)],
    [(3.3549168962585846e-11, 2.2439785426422154e-10), (2.2552339990697566e-10, -2.4238018011130691e-11), (-7.1010886635186778e-10, -1.6032390665010143e-9), (-1.6342016486441652e-9, 6.3792126266696345e-10), (-1.5226247568647102e-9, -9.0375856575485968e-10), (-9.6625997285590045e-10, 1.478651003360388e-9)],
    [(1.8677618469042517e-12, 1.8675073456962037e-11), (1.8733421995444302e-11, -1.0936762028374942e-12), (-5.8777428049348222e-11, -1.4584775485565859e-10), (-1.4838563716256534e-10, 5.22753993241595e-11), (-1.2303439011146121e-10, -9.0593895007725857e-11), (-9.5625947491372886e-11, 1.1876098434913574e-10)],
];

/// per l: [A, B, P, Q, E, I] as (re, im)
pub const KFE_K001_R2_L3: &[[(f64, f64); 6]] = &[
    [(-9.9995000083332639e-5, 0.31859812792149224), (0.0049992500208330903, 15.904266841978685), (1.6313261169996311e-55, -4.1109418148390705e-53), (0.002499875002083316, -7.9649531980373059), (-4.9992500208330903e-5, -0.15904266841978685), (-7.4995833406249375e-7, -15.913900637747433)],
    [(-25.002499812503472, 80.028791635892996), (-2.4999166677083264e-5, 1591.7086619026648), (12.503749781253819, -47.979349015983804), (2.4999166677083264e-5, -1591.7086619026648), (25.000000187493056, -87.980925056882338), (-1.2498750026041424e-5, -2387.4036937900365)],
    [(-2499.9999937501389, 7206.383843785569), (-12.500624968750434, 119410.19908531977), (2500.2499812503472, -8002.8791635892996), (6.2521874218759983, -179083.24918535975), (3750.0000031247917, -11605.430096629686), (12.500000031249132, -238780.38377482159)],
];

pub const CYL_SOFT_2PI_R2_PI3: (f64, f64) = (0.031963973801314116, -0.49531715996716182);
pub const CYL_HARD_2PI_R2_PI3: (f64, f64) = (0.073049152339348256, 0.10688128083434266);
pub const CYL_SOFT_K001_R2_0: (f64, f64) = (-0.86770513329344904, -0.048984550650076388);
pub const CYL_SOFT_FFP_2PI_0: (f64, f64) = (-1.9800192206517295, 1.2585021334644033);
pub const CYL_SOFT_FFP_2PI_PI2: (f64, f64) = (0.49906545170948718, 0.38752228266650492);
pub const CYL_HARD_FFP_2PI_PI: (f64, f64) = (0.67484071938602653, -0.079215881565943815);
pub const SPH_SOFT_2PI_R2_PI4: (f64, f64) = (0.46507672575462646, 0.025528244595730665);

