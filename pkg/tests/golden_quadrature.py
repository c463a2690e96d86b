"""Appendix-published 27-point Gauss-Lobatto tables, keyed by alpha.

Weight exponents are a = alpha - 1, b = 0; values carry the 16 digits of
the source tables.  Used as golden data by the quadrature tests.
"""

GOLDEN = {
    0.1: (
        (-1.0000000000000000, -0.9892016529048960, -0.9639539701336150, -0.9247048615099546, -0.8720275885827603, -0.8066879161228238, -0.7296351534780572, -0.6419886593191621, -0.5450216478217176, -0.4401427133803333, -0.3288753760288977, -0.2128359531749780, -0.0937100816930866, 0.0267717676524930, 0.1468594274088615, 0.2648084569648291, 0.3789054830602389, 0.4874930892080245, 0.5889938926263092, 0.6819334593243178, 0.7649617255263299, 0.8368726174182031, 0.8966215953237894, 0.9433409167504676, 0.9763527097958942, 0.9951835446365114, 1.0000000000000000),
        (0.0015793891284060, 0.0097486968513111, 0.0176099210456689, 0.0255586083473313, 0.0336423948344829, 0.0419097843832046, 0.0504145465068031, 0.0592179803160306, 0.0683915067416097, 0.0780200133502234, 0.0882063337718825, 0.0990774042058216, 0.1107929333210531, 0.1235579229632447, 0.1376412507907670, 0.1534041057504351, 0.1713450510950583, 0.1921744216247991, 0.2169432942460124, 0.2472807617819305, 0.2858641340356679, 0.3374445171968009, 0.4113924209918509, 0.5293048192507985, 0.7555606909447271, 1.4176717079984273, 5.0539800138885518),
    ),
    0.3: (
        (-1.0000000000000000, -0.9892836220495154, -0.9642264317182587, -0.9252701785814652, -0.8729795316392537, -0.8081088436911802, -0.7315934254809393, -0.6445363551226361, -0.5481926424422340, -0.4439511569824626, -0.3333146137264882, -0.2178779134712215, -0.0993051526697154, 0.0206943649229667, 0.1403907686322420, 0.2580585579193416, 0.3720014765729532, 0.4805769654678000, 0.5822198414675918, 0.6754648613490701, 0.7589678460750942, 0.8315250626755174, 0.8920905904778630, 0.9397914478954834, 0.9739404234643343, 0.9940482649436114, 1.0000000000000000),
        (0.0018004451789191, 0.0111011132499144, 0.0200016826109024, 0.0289128339852526, 0.0378465851188033, 0.0468128223976810, 0.0558230223195378, 0.0648912240850699, 0.0740349165644332, 0.0832761166251512, 0.0926427678850384, 0.1021706112368920, 0.1119057485004456, 0.1219082421622975, 0.1322573016048666, 0.1430589703422321, 0.1544578938601842, 0.1666560217001116, 0.1799436799255219, 0.1947540530811646, 0.2117653286898140, 0.2321093791361104, 0.2578499674265770, 0.2932722023123962, 0.3493613894433857, 0.4687789976411144, 0.4664213940659055),
    ),
    0.5: (
        (-1.0000000000000000, -0.9893643555933919, -0.9644947993303408, -0.9258270443312571, -0.8739173433922172, -0.8095088697871018, -0.7335232176624819, -0.6470475078824108, -0.5513189009359872, -0.4477069175659654, -0.3376938533233919, -0.2228535755897699, -0.1048290089639729, 0.0146913679757165, 0.1339976779295242, 0.2513831064264158, 0.3651683196413840, 0.4737254891175540, 0.5755015796722314, 0.6690405673158345, 0.7530042693246988, 0.8261914884659855, 0.8875551974923557, 0.9362175180611009, 0.9714822797862176, 0.9928449797512120, 1.0000000000000000),
        (0.0020525595970582, 0.0126420869565904, 0.0227208651492852, 0.0327129904967510, 0.0425872817104095, 0.0523089398061103, 0.0618432836433182, 0.0711562189729229, 0.0802144213662633, 0.0889854705911301, 0.0974379713316180, 0.1055416672643979, 0.1132675500578416, 0.1205879635232249, 0.1274767027659907, 0.1339091080692547, 0.1398621532108058, 0.1453145279145870, 0.1502467141498365, 0.1546410560090228, 0.1584818229166975, 0.1617552659442731, 0.1644496670298319, 0.1665553809272196, 0.1680648697345029, 0.1689727298783471, 0.0846378557289007),
    ),
    0.7: (
        (-1.0000000000000000, -0.9894438812775599, -0.9647591646875335, -0.9263756474471649, -0.8748413378464713, -0.8108884559986644, -0.7354251541586265, -0.6495229109880948, -0.5544013837390309, -0.4514111111711064, -0.3420143458160455, -0.2277642960175138, -0.1102830750128124, 0.0087613289573869, 0.1276787341676305, 0.2447807621576336, 0.3584048089141069, 0.4669376500627146, 0.5688383448113328, 0.6626601132252578, 0.7470708756553147, 0.8208721610920136, 0.8830161106263974, 0.9326203125145781, 0.9689801330973330, 0.9915771271381129, 1.0000000000000000),
        (0.0023401106204443, 0.0143980191213123, 0.0258125839599000, 0.0370189772483234, 0.0479340538950119, 0.0584716242404765, 0.0685470018011806, 0.0780777884066716, 0.0869842827280500, 0.0951897677589023, 0.1026206972731357, 0.1092067627458629, 0.1148808056093876, 0.1195785218117537, 0.1232378787845395, 0.1257981209039414, 0.1271981640581311, 0.1273740449364915, 0.1262548372106364, 0.1237559426680637, 0.1197675894104367, 0.1141338609152897, 0.1066110258518362, 0.0967739548306226, 0.0837631042002331, 0.0653397616047768, 0.0196518498509760),
    ),
    0.9: (
        (-1.0000000000000000, -0.9895222260184334, -0.9650196167842330, -0.9269161710244489, -0.8757518197224115, -0.8122480503073657, -0.7372998407745818, -0.6519633346267486, -0.5574410233343691, -0.4550648215271042, -0.3462773061846129, -0.2326113924086162, -0.1156687346912121, 0.0029028410706502, 0.1214325564431927, 0.2382502228570740, 0.3517097756999029, 0.4602124683760809, 0.5622293993378423, 0.6563230543010921, 0.7411675592086939, 0.8155673560609422, 0.8784740302618931, 0.9290010193400755, 0.9664358148554766, 0.9902477964312976, 1.0000000000000000),
        (0.0026680954862362, 0.0163990211169060, 0.0293282050572500, 0.0418988082171859, 0.0539656088052377, 0.0653836420874911, 0.0760144717348032, 0.0857281246221285, 0.0944045439109477, 0.1019348490180515, 0.1082224273322169, 0.1131838455110155, 0.1167495593531492, 0.1188643960701240, 0.1194877759976240, 0.1185936294194118, 0.1161699441834089, 0.1122178437862630, 0.1067500287515353, 0.0997882844987957, 0.0913594924131627, 0.0814889890869870, 0.0701886634133376, 0.0574330648431000, 0.0431024991510826, 0.0268013946767667, 0.0052794393153508),
    ),
    1.2: (
        (-1.0000000000000000, -0.9896375857934652, -0.9654031458102729, -0.9277121945697792, -0.8770928511031259, -0.8142509047810206, -0.7400620590862488, -0.6555600135812010, -0.5619221255221779, -0.4604530253538590, -0.3525664467804354, -0.2397655327004557, -0.1236218938939909, -0.0057537131214067, 0.1121967999388062, 0.2285862886357495, 0.3417931453037846, 0.4502401041519408, 0.5524162161956613, 0.6468978998418504, 0.7323687733098204, 0.8076379911244389, 0.8716568246106763, 0.9235332376746080, 0.9625441648076186, 0.9881446058894564, 1.0000000000000000),
        (0.0032485813206930, 0.0199364618399667, 0.0355265819180070, 0.0504662938531113, 0.0644948884276532, 0.0773638096423790, 0.0888474771253680, 0.0987484771441300, 0.1069017533569795, 0.1131780974268036, 0.1174869327523327, 0.1197783563983938, 0.1200444135582023, 0.1183195966655319, 0.1146805830124639, 0.1092452502518708, 0.1021710400770435, 0.0936527803497127, 0.0839201325248429, 0.0732349201079911, 0.0618887495635877, 0.0502016389583398, 0.0385230330239028, 0.0272382282726720, 0.0167880196253709, 0.0077265395634170, 0.0008846215676251),
    ),
    1.5: (
        (-1.0000000000000000, -0.9897504320058830, -0.9657783446854108, -0.9284910158577785, -0.8784051049048023, -0.8162111679198959, -0.7427661984333459, -0.6590821003162865, -0.5663118098346140, -0.4657334305951538, -0.3587326320143288, -0.2467835618430933, -0.1314285381791132, -0.0142568016179130, 0.1031173793924301, 0.2190769482282871, 0.3320243383882507, 0.4404034835594873, 0.5427212564354959, 0.6375680414418941, 0.7236371592440043, 0.7997428790488688, 0.8648367821754457, 0.9180222971008329, 0.9585674487321285, 0.9859178863652559, 1.0000000000000000),
        (0.0039558421325122, 0.0242407262612330, 0.0430450442150069, 0.0608075612568833, 0.0771197426976410, 0.0916086237361090, 0.1039548961583067, 0.1139030192180424, 0.1212688126551674, 0.1259447610428847, 0.1279029357867882, 0.1271954603677246, 0.1239525097131300, 0.1183779081926168, 0.1107424642216554, 0.1013752491912932, 0.0906530919063302, 0.0789886148348753, 0.0668171834999999, 0.0545831738546201, 0.0427259833787319, 0.0316662190978989, 0.0217924888159768, 0.0134491973972607, 0.0069256857723223, 0.0024466760492113, 0.0001742117099051),
    ),
    1.8: (
        (-1.0000000000000000, -0.9898608459541634, -0.9661454822450298, -0.9292531881022244, -0.8796895020922768, -0.8181301941668921, -0.7454140912397981, -0.6625319256813679, -0.5706128999526579, -0.4709093210906420, -0.3647795460854125, -0.2536694784396956, -0.1390928704191656, -0.0226107001846948, 0.0941900949493554, 0.2097182393627444, 0.3223997996747073, 0.4306996300173916, 0.5331422907681873, 0.6283321577931673, 0.7149724532569940, 0.7918829524158366, 0.8580161681069255, 0.9124719559264060, 0.9545111721119047, 0.9835752524825214, 1.0000000000000000),
        (0.0048176566867522, 0.0294787408291468, 0.0521665283985357, 0.0732935305513724, 0.0922636940579904, 0.1085561087536052, 0.1217534509743617, 0.1315582543475505, 0.1378033510671248, 0.1404566089311143, 0.1396198574132639, 0.1355220825893431, 0.1285072066852624, 0.1190169991802236, 0.1075698748132034, 0.0947365082759497, 0.0811133270750175, 0.0672950260065822, 0.0538472733927563, 0.0412807461037388, 0.0300275324422679, 0.0204207704286011, 0.0126781227682169, 0.0068892709351844, 0.0030068635217618, 0.0008386286076415, 0.0000387924881512),
    ),
}
