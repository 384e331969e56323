// Generated by tests/oracles/generate.py (mpmath). Do not edit by hand.


/// (nu, beta, z_re, z_im, value_re, value_im)
pub const ML_CASES: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 1.0, 0.5, 0.0, 2.0620157899559994, 0.0),
    (0.3, 1.0, -1.0, 0.0, 0.45659440832969067, 0.0),
    (0.3, 1.0, 0.0, 2.0, 0.11953416195706788, 0.36339149208490573),
    (0.3, 1.0, -3.0, 1.0, 0.1973948664722359, 0.05365109989571396),
    (0.3, 1.0, 4.5, -2.0, 5297786858493581.0, 9433169784277606.0),
    (0.3, 1.0, -8.0, 0.0, 0.08949309581862072, 0.0),
    (0.3, 1.0, 0.0, 6.0, 0.012651488084596868, 0.12787395580306518),
    (0.3, 1.0, -7.0, -7.0, 0.054934971816186354, -0.050505642218026704),
    (0.3, 0.7, 0.5, 0.0, 1.8013910788445657, 0.0),
    (0.3, 0.7, -1.0, 0.0, 0.3137887755368753, 0.0),
    (0.3, 0.7, 0.0, 2.0, 0.04360019969675458, 0.23906832391413574),
    (0.3, 0.7, -3.0, 1.0, 0.1245474845541444, 0.03644156678509399),
    (0.3, 0.7, 4.5, -2.0, 4.2706380431776344e+16, 3.185369031226207e+16),
    (0.3, 0.7, -8.0, 0.0, 0.054438417317600206, 0.0),
    (0.3, 0.7, 0.0, 6.0, 0.0031394490481749904, 0.0759089285075812),
    (0.3, 0.7, -7.0, -7.0, 0.032298885627074635, -0.031005307187117553),
    (0.3, 1.6, 0.5, 0.0, 2.019578142729394, 0.0),
    (0.3, 1.6, -1.0, 0.0, 0.5708369168769926, 0.0),
    (0.3, 1.6, 0.0, 2.0, 0.22011645951073303, 0.4662733812524245),
    (0.3, 1.6, -3.0, 1.0, 0.2668452758882266, 0.06756003083472145),
    (0.3, 1.6, 4.5, -2.0, -142345447408185.94, 422827798826477.4),
    (0.3, 1.6, -8.0, 0.0, 0.12505364319057868, 0.0),
    (0.3, 1.6, 0.0, 6.0, 0.027426347553205645, 0.1821550304300207),
    (0.3, 1.6, -7.0, -7.0, 0.07907338691441924, -0.06994522991476836),
    (0.5, 1.0, 0.5, 0.0, 1.952360489182557, 0.0),
    (0.5, 1.0, -1.0, 0.0, 0.427583576155807, 0.0),
    (0.5, 1.0, 0.0, 2.0, 0.01831563888873418, 0.3400262170660662),
    (0.5, 1.0, -3.0, 1.0, 0.1642611363929862, 0.050197135135248594),
    (0.5, 1.0, 4.5, -2.0, 15068416.301265549, 17137516.556401502),
    (0.5, 1.0, -8.0, 0.0, 0.06998516620088092, 0.0),
    (0.5, 1.0, 0.0, 6.0, 2.3195228302435696e-16, 0.09539620896911076),
    (0.5, 1.0, -7.0, -7.0, 0.040501640057114686, -0.040090583461840794),
    (0.5, 1.0, -15.0, 0.0, 0.03752960638850576, 0.0),
    (0.5, 1.0, 0.0, 12.0, 2.4365949564509548e-36, 0.047180778707018846),
    (0.5, 1.0, -20.0, 5.0, 0.026526250768395588, 0.00661604157996726),
    (0.5, 1.0, 9.0, 9.0, 0.3815247618568882, -1.925654457790976),
    (0.5, 0.7, 0.5, 0.0, 1.7619698868096871, 0.0),
    (0.5, 0.7, -1.0, 0.0, 0.26360861509838757, 0.0),
    (0.5, 0.7, 0.0, 2.0, -0.07431933386035885, 0.1689295329545076),
    (0.5, 0.7, -3.0, 1.0, 0.0798086667593399, 0.02957450196631336),
    (0.5, 0.7, 4.5, -2.0, 49064622.04772486, 33467702.810636025),
    (0.5, 0.7, -8.0, 0.0, 0.030437263753750145, 0.0),
    (0.5, 0.7, 0.0, 6.0, -0.0066680484243117335, 0.03715476570976868),
    (0.5, 0.7, -7.0, -7.0, 0.01571479419581722, -0.017787227683657553),
    (0.5, 0.7, -15.0, 0.0, 0.015491736955938034, 0.0),
    (0.5, 0.7, 0.0, 12.0, -0.0016196911272136167, 0.018254204278969555),
    (0.5, 0.7, -20.0, 5.0, 0.010714753965753072, 0.00280392136398951),
    (0.5, 0.7, 9.0, 9.0, 5.768432005258601, -7.149174089555804),
    (0.5, 1.6, 0.5, 0.0, 1.8516449706349505, 0.0),
    (0.5, 1.6, -1.0, 0.0, 0.5805149381665708, 0.0),
    (0.5, 1.6, 0.0, 2.0, 0.1923977526713846, 0.4996990941966234),
    (0.5, 1.6, -3.0, 1.0, 0.2643306150971204, 0.06956946536244811),
    (0.5, 1.6, 4.5, -2.0, 733126.4155034088, 3288163.6606607134),
    (0.5, 1.6, -8.0, 0.0, 0.12116654906229671, 0.0),
    (0.5, 1.6, 0.0, 6.0, 0.01886882584169681, 0.17468999724091233),
    (0.5, 1.6, -7.0, -7.0, 0.07497736010209897, -0.06830682541666633),
    (0.5, 1.6, -15.0, 0.0, 0.06712762817478359, 0.0),
    (0.5, 1.6, 0.0, 12.0, 0.004676310475144783, 0.08753353551571832),
    (0.5, 1.6, -20.0, 5.0, 0.04808086253436412, 0.011632033626045563),
    (0.5, 1.6, 9.0, 9.0, -0.12169011818441243, -0.007539073277135732),
    (0.8, 1.0, 0.5, 0.0, 1.763203674366713, 0.0),
    (0.8, 1.0, -1.0, 0.0, 0.38694857861897686, 0.0),
    (0.8, 1.0, 0.0, 2.0, -0.3393479375411659, 0.48554239500845164),
    (0.8, 1.0, -3.0, 1.0, 0.09583222554947779, 0.04427266438717885),
    (0.8, 1.0, 4.5, -2.0, -624.3768786079206, 358.362799091297),
    (0.8, 1.0, -8.0, 0.0, 0.03227382844683579, 0.0),
    (0.8, 1.0, 0.0, 6.0, -0.032300052389709455, 0.05801641888887894),
    (0.8, 1.0, -7.0, -7.0, 0.015235104289442957, -0.01859793624023657),
    (0.8, 1.0, -15.0, 0.0, 0.015843800747790796, 0.0),
    (0.8, 1.0, 0.0, 12.0, -0.0019071537170299985, 0.018172042712831005),
    (0.8, 1.0, -20.0, 5.0, 0.010845400965398924, 0.0028929622915990724),
    (0.8, 1.0, 9.0, 9.0, 330109.07665763766, 717416.1540089356),
    (0.8, 1.0, -40.0, 0.0, 0.005620733063863367, 0.0),
    (0.8, 1.0, 0.0, 30.0, -0.0002999851005939355, 0.007246902807381724),
    (0.8, 1.0, -30.0, -30.0, 0.003626792823788686, -0.0037841719727668517),
    (0.8, 1.0, 20.0, 0.0, 2.919646113836312e+18, 0.0),
    (0.8, 0.7, 0.5, 0.0, 1.619891159421476, 0.0),
    (0.8, 0.7, -1.0, 0.0, 0.1830739118647538, 0.0),
    (0.8, 0.7, 0.0, 2.0, -0.609691845262466, 0.16456920818167253),
    (0.8, 0.7, -3.0, 1.0, -0.006503162546798696, 0.014150182759888674),
    (0.8, 0.7, 4.5, -2.0, -1019.4354596758479, 820.8990479656803),
    (0.8, 0.7, -8.0, 0.0, -0.0091202009096056, 0.0),
    (0.8, 0.7, 0.0, 6.0, -0.06834506123574244, -0.00642225739783801),
    (0.8, 0.7, -7.0, -7.0, -0.007103563630337622, 0.005448958314799452),
    (0.8, 0.7, -15.0, 0.0, -0.00567618720149967, 0.0),
    (0.8, 0.7, 0.0, 12.0, -0.0010503804648378792, -0.007591134459474802),
    (0.8, 0.7, -20.0, 5.0, -0.004170099867812323, -0.0009602577378106794),
    (0.8, 0.7, 9.0, 9.0, 279419.62731090415, 2030884.2974087815),
    (0.8, 0.7, -40.0, 0.0, -0.0022736688760484534, 0.0),
    (0.8, 0.7, 0.0, 30.0, -0.00010381164150788403, -0.0031339008907417102),
    (0.8, 0.7, -30.0, -30.0, -0.0015636526606990161, 0.0015034033349217513),
    (0.8, 0.7, 20.0, 0.0, 8.978762060443021e+18, 0.0),
    (0.8, 1.6, 0.5, 0.0, 1.64975131762354, 0.0),
    (0.8, 1.6, -1.0, 0.0, 0.6031931744664256, 0.0),
    (0.8, 1.6, 0.0, 2.0, 0.1447693878016659, 0.692110026483628),
    (0.8, 1.6, -3.0, 1.0, 0.25205779977105164, 0.0757165947746376),
    (0.8, 1.6, 4.5, -2.0, -213.26086208842688, 44.77585045133108),
    (0.8, 1.6, -8.0, 0.0, 0.10689015971737172, 0.0),
    (0.8, 1.6, 0.0, 6.0, 0.0028291715221601776, 0.15225619917332336),
    (0.8, 1.6, -7.0, -7.0, 0.061531671843236505, -0.06123404858744193),
    (0.8, 1.6, -15.0, 0.0, 0.05720098042487465, 0.0),
    (0.8, 1.6, 0.0, 12.0, 1.0561579130072182e-05, 0.07169678018951818),
    (0.8, 1.6, -20.0, 5.0, 0.04040439122137704, 0.010089568964576339),
    (0.8, 1.6, 9.0, 9.0, 99880.21337229742, 61305.42430596777),
    (0.8, 1.6, -40.0, 0.0, 0.021470524445565322, 0.0),
    (0.8, 1.6, 0.0, 30.0, -5.322956434015571e-07, 0.028637650910147913),
    (0.8, 1.6, -30.0, -30.0, 0.014317368726473111, -0.01431400836095643),
    (0.8, 1.6, 20.0, 0.0, 3.087149900186434e+17, 0.0),
    (1.0, 1.0, 0.5, 0.0, 1.6487212707001282, 0.0),
    (1.0, 1.0, -1.0, 0.0, 0.36787944117144233, 0.0),
    (1.0, 1.0, 0.0, 2.0, -0.4161468365471424, 0.9092974268256817),
    (1.0, 1.0, -3.0, 1.0, 0.026900067841571607, 0.041894373450204546),
    (1.0, 1.0, 4.5, -2.0, -37.46034442576091, -81.85234586179402),
    (1.0, 1.0, -8.0, 0.0, 0.00033546262790251185, 0.0),
    (1.0, 1.0, 0.0, 6.0, 0.960170286650366, -0.27941549819892586),
    (1.0, 1.0, -7.0, -7.0, 0.0006874698695265534, -0.0005990942309826656),
    (1.0, 1.0, -15.0, 0.0, 3.059023205018258e-07, 0.0),
    (1.0, 1.0, 0.0, 12.0, 0.8438539587324921, -0.5365729180004349),
    (1.0, 1.0, -20.0, 5.0, 5.846713411163669e-10, -1.9764902423661943e-09),
    (1.0, 1.0, 9.0, 9.0, -7382.964981005277, 3339.430674019191),
    (1.0, 1.0, -40.0, 0.0, 4.248354255291589e-18, 0.0),
    (1.0, 1.0, 0.0, 30.0, 0.15425144988758405, -0.9880316240928618),
    (1.0, 1.0, -30.0, -30.0, 1.4434269104449557e-14, 9.245627419551825e-14),
    (1.0, 1.0, 20.0, 0.0, 485165195.4097903, 0.0),
    (1.0, 0.7, 0.5, 0.0, 1.5169952889484366, 0.0),
    (1.0, 0.7, -1.0, 0.0, 0.13056085969782286, 0.0),
    (1.0, 0.7, 0.0, 2.0, -0.9256528765293643, 0.680584131041629),
    (1.0, 0.7, -3.0, 1.0, -0.09358100467634811, -0.0017908463720005025),
    (1.0, 0.7, 4.5, -2.0, -76.44683505464558, -123.4361153617888),
    (1.0, 0.7, -8.0, 0.0, -0.03582836066693323, 0.0),
    (1.0, 0.7, 0.0, 6.0, 1.688747176769684, 0.28394682180226083),
    (1.0, 0.7, -7.0, -7.0, -0.015472753684712945, 0.01815596469374447),
    (1.0, 0.7, -15.0, 0.0, -0.017014228986615483, 0.0),
    (1.0, 0.7, 0.0, 12.0, 2.0998969821428854, -0.2190741234031847),
    (1.0, 0.7, -20.0, 5.0, -0.011566171231163987, -0.003118505976437681),
    (1.0, 0.7, 9.0, 9.0, -17071.07035901225, 3268.2026749935294),
    (1.0, 0.7, -40.0, 0.0, -0.005977453877881429, 0.0),
    (1.0, 0.7, 0.0, 30.0, 1.6259960344470308, -2.2556443331456193),
    (1.0, 0.7, -30.0, -30.0, -0.0038447643793979025, 0.004025170490938593),
    (1.0, 0.7, 20.0, 0.0, 1191786980.6073763, 0.0),
    (1.0, 1.6, 0.5, 0.0, 1.5466300172770928, 0.0),
    (1.0, 1.6, -1.0, 0.0, 0.6277244816746952, 0.0),
    (1.0, 1.6, 0.0, 2.0, 0.27650422515628625, 0.8868969106741533),
    (1.0, 1.6, -3.0, 1.0, 0.23756394649354134, 0.0853163754659741),
    (1.0, 1.6, 4.5, -2.0, -6.251289524028435, -34.0879599393054),
    (1.0, 1.6, -8.0, 0.0, 0.0892746295351249, 0.0),
    (1.0, 1.6, 0.0, 6.0, 0.10852904105330419, -0.21071378109734246),
    (1.0, 1.6, -7.0, -7.0, 0.04776040459551524, -0.05079360304122544),
    (1.0, 1.6, -15.0, 0.0, 0.046096087617159213, 0.0),
    (1.0, 1.6, 0.0, 12.0, 0.012113773551774648, -0.16897623235007578),
    (1.0, 1.6, -20.0, 5.0, 0.03219278776802303, 0.008231415721518564),
    (1.0, 1.6, 9.0, 9.0, -1100.2705661054001, 1375.2188613444885),
    (1.0, 1.6, -40.0, 0.0, 0.01696176255796199, 0.0),
    (1.0, 1.6, 0.0, 30.0, -0.0923783135476127, -0.06930519653925943),
    (1.0, 1.6, -30.0, -30.0, 0.011187973586283623, -0.011344436444847146),
    (1.0, 1.6, 20.0, 0.0, 80402886.51703003, 0.0),
    (1.3, 1.0, 0.5, 0.0, 1.5022473445794167, 0.0),
    (1.3, 1.0, -1.0, 0.0, 0.36894184906938254, 0.0),
    (1.3, 1.0, 0.0, 2.0, 0.01591524151958308, 1.3439575662091845),
    (1.3, 1.0, -3.0, 1.0, -0.1280727822374641, 0.07244695553884709),
    (1.3, 1.0, 4.5, -2.0, 9.271246607468427, -17.183984155787204),
    (1.3, 1.0, -8.0, 0.0, -0.07177013005767402, 0.0),
    (1.3, 1.0, 0.0, 6.0, -2.636285789410734, -1.7257437849000412),
    (1.3, 1.0, -7.0, -7.0, 0.1392896514021719, 0.13327187172276356),
    (1.3, 1.0, -15.0, 0.0, -0.015104784441975315, 0.0),
    (1.3, 1.0, 0.0, 12.0, 8.460249870709472, 0.32252212647710765),
    (1.3, 1.0, -20.0, 5.0, -0.012112346179779772, -0.0016790724739730973),
    (1.3, 1.0, 9.0, 9.0, -166.1145009236744, -200.26225895046971),
    (1.3, 1.0, -40.0, 0.0, -0.006051771004440883, 0.0),
    (1.3, 1.0, 0.0, 30.0, 95.95597752903755, 22.398427312091286),
    (1.3, 1.0, -30.0, -30.0, -0.003121642610719256, 0.014767916294845954),
    (1.3, 1.0, 20.0, 0.0, 17255.677189249705, 0.0),
    (1.3, 1.0, -50.0, 0.0, -0.004798038492797232, 0.0),
    (1.3, 1.0, 45.0, 0.0, 101100195.80800025, 0.0),
    (1.3, 1.0, 35.0, 20.0, 5297032.632353349, 2210902.841334481),
    (1.3, 0.7, 0.5, 0.0, 1.373536739092269, 0.0),
    (1.3, 0.7, -1.0, 0.0, 0.07729793685067954, 0.0),
    (1.3, 0.7, 0.0, 2.0, -0.5667539027520687, 1.432069652168784),
    (1.3, 0.7, -3.0, 1.0, -0.3236825629153122, 0.0027816809325718404),
    (1.3, 0.7, 4.5, -2.0, 10.933899508801261, -25.995877153445207),
    (1.3, 0.7, -8.0, 0.0, -0.07144386673645135, 0.0),
    (1.3, 0.7, 0.0, 6.0, -2.826932169951311, -3.855844468821599),
    (1.3, 0.7, -7.0, -7.0, 0.300641827409815, 0.04756055239896566),
    (1.3, 0.7, -15.0, 0.0, -0.011252696512921538, 0.0),
    (1.3, 0.7, 0.0, 12.0, 13.818036941001512, 5.864467392006458),
    (1.3, 0.7, -20.0, 5.0, -0.015058025515562318, -0.0013845836929519241),
    (1.3, 0.7, 9.0, 9.0, -228.9687421599409, -408.15526336306533),
    (1.3, 0.7, -40.0, 0.0, -0.006836162612412695, 0.0),
    (1.3, 0.7, 0.0, 30.0, 179.26406443144455, 120.50843726447486),
    (1.3, 0.7, -30.0, -30.0, 0.010060224679107527, 0.02538485977961736),
    (1.3, 0.7, 20.0, 0.0, 34448.44294091367, 0.0),
    (1.3, 0.7, -50.0, 0.0, -0.005467328871517367, 0.0),
    (1.3, 0.7, 45.0, 0.0, 243367497.75162485, 0.0),
    (1.3, 0.7, 35.0, 20.0, 11722044.42263869, 6637182.953847145),
    (1.3, 1.6, 0.5, 0.0, 1.427543898601442, 0.0),
    (1.3, 1.6, -1.0, 0.0, 0.683613570535124, 0.0),
    (1.3, 1.6, 0.0, 2.0, 0.635048124987828, 0.9467554836505975),
    (1.3, 1.6, -3.0, 1.0, 0.22051490656845615, 0.11981369468276783),
    (1.3, 1.6, 4.5, -2.0, 5.863757535381185, -7.261943798595915),
    (1.3, 1.6, -8.0, 0.0, 0.03628587563256415, 0.0),
    (1.3, 1.6, 0.0, 6.0, -1.3591066995387158, 0.2711010852277291),
    (1.3, 1.6, -7.0, -7.0, 0.015995327333300335, 0.04167321278095183),
    (1.3, 1.6, -15.0, 0.0, 0.021213128941008127, 0.0),
    (1.3, 1.6, 0.0, 12.0, 2.082359180753727, -1.6719841896664198),
    (1.3, 1.6, -20.0, 5.0, 0.015952496747806515, 0.0040503864916918075),
    (1.3, 1.6, 9.0, 9.0, -69.98301914196114, -39.64939052219553),
    (1.3, 1.6, -40.0, 0.0, 0.008343707198684425, 0.0),
    (1.3, 1.6, 0.0, 30.0, 18.0376141733425, -9.739743316097725),
    (1.3, 1.6, -30.0, -30.0, 0.0039635038925626255, -0.004571204090036748),
    (1.3, 1.6, 20.0, 0.0, 4329.66893219405, 0.0),
    (1.3, 1.6, -50.0, 0.0, 0.006679320149868125, 0.0),
    (1.3, 1.6, 45.0, 0.0, 17447404.759451512, 0.0),
    (1.3, 1.6, 35.0, 20.0, 1029549.44618959, 161711.52459255257),
    (1.7, 1.0, 0.5, 0.0, 1.3492509890602333, 0.0),
    (1.7, 1.0, -1.0, 0.0, 0.44454443263222343, 0.0),
    (1.7, 1.0, 0.0, 2.0, 0.6100980277766996, 1.238870268417644),
    (1.7, 1.0, -3.0, 1.0, -0.27090607059536576, 0.212021242852744),
    (1.7, 1.0, 4.5, -2.0, 5.7450173416818275, -4.063135251605114),
    (1.7, 1.0, -8.0, 0.0, -0.4809932877077402, 0.0),
    (1.7, 1.0, 0.0, 6.0, -2.1758417886232246, 2.4324197877356024),
    (1.7, 1.0, -7.0, -7.0, -1.011309463384299, 0.7404078644383202),
    (1.7, 1.0, -15.0, 0.0, -0.006991747338583804, 0.0),
    (1.7, 1.0, 0.0, 12.0, -7.565153788841096, -2.3704870142965158),
    (1.7, 1.0, -20.0, 5.0, 0.2701104980874844, -0.06784408423919519),
    (1.7, 1.0, 9.0, 9.0, -13.032402912803793, 29.232955943817405),
    (1.7, 1.0, -40.0, 0.0, -0.06307062249511693, 0.0),
    (1.7, 1.0, 0.0, 30.0, 47.01154846504797, -18.918476032574258),
    (1.7, 1.0, -30.0, -30.0, -2.7145276939382494, -1.5228803543290605),
    (1.7, 1.0, 20.0, 0.0, 199.26823923535864, 0.0),
    (1.7, 1.0, -50.0, 0.0, -0.07962286673713104, 0.0),
    (1.7, 1.0, 45.0, 0.0, 7011.565989784876, 0.0),
    (1.7, 1.0, 35.0, 20.0, -2278.61857584722, 1234.529942190198),
    (1.7, 0.7, 0.5, 0.0, 1.2110951953071956, 0.0),
    (1.7, 0.7, -1.0, 0.0, 0.10096565496170205, 0.0),
    (1.7, 0.7, 0.0, 2.0, 0.19176594092310661, 1.5171675193111573),
    (1.7, 0.7, -3.0, 1.0, -0.6656378620243422, 0.18146719572918385),
    (1.7, 0.7, 4.5, -2.0, 7.152275332584138, -5.933997979142868),
    (1.7, 0.7, -8.0, 0.0, -0.5144094726214588, 0.0),
    (1.7, 0.7, 0.0, 6.0, -3.837477077233529, 2.431345827189664),
    (1.7, 0.7, -7.0, -7.0, -0.9324518094180302, 1.5310310392128763),
    (1.7, 0.7, -15.0, 0.0, 0.2700659794841274, 0.0),
    (1.7, 0.7, 0.0, 12.0, -10.294923732514969, -6.7087823752555),
    (1.7, 0.7, -20.0, 5.0, 0.5411211441091701, 0.07273653337395129),
    (1.7, 0.7, 9.0, 9.0, -26.573208022959435, 42.550211342344),
    (1.7, 0.7, -40.0, 0.0, -0.18464679891770264, 0.0),
    (1.7, 0.7, 0.0, 30.0, 91.84037788861873, -9.700236271853615),
    (1.7, 0.7, -30.0, -30.0, -6.000060490695127, -0.5820875744356238),
    (1.7, 0.7, 20.0, 0.0, 338.0699352129844, 0.0),
    (1.7, 0.7, -50.0, 0.0, -0.11291781425209081, 0.0),
    (1.7, 0.7, 45.0, 0.0, 13726.445249438533, 0.0),
    (1.7, 0.7, 35.0, 20.0, -4573.558630283138, 1960.1581886657648),
    (1.7, 1.6, 0.5, 0.0, 1.3162277134961717, 0.0),
    (1.7, 1.6, -1.0, 0.0, 0.7858518579047384, 0.0),
    (1.7, 1.6, 0.0, 2.0, 0.9539084646421676, 0.7260316410171417),
    (1.7, 1.6, -3.0, 1.0, 0.2934666643967768, 0.17778970814536357),
    (1.7, 1.6, 4.5, -2.0, 3.5540820826212074, -1.8270263684161538),
    (1.7, 1.6, -8.0, 0.0, -0.13727533286569318, 0.0),
    (1.7, 1.6, 0.0, 6.0, -0.26909005700068006, 1.7303873566409327),
    (1.7, 1.6, -7.0, -7.0, -0.5275029894003024, -0.07135866243988587),
    (1.7, 1.6, -15.0, 0.0, -0.11142352356582909, 0.0),
    (1.7, 1.6, 0.0, 12.0, -3.1816760267667408, 0.818528739839002),
    (1.7, 1.6, -20.0, 5.0, -0.00024442826940584565, -0.07664925696185343),
    (1.7, 1.6, 9.0, 9.0, -1.8466273490939689, 12.91609078695687),
    (1.7, 1.6, -40.0, 0.0, 0.012471605451268361, 0.0),
    (1.7, 1.6, 0.0, 30.0, 9.037281773101553, -12.295146254008444),
    (1.7, 1.6, -30.0, -30.0, -0.18750102088900036, -0.8065133116249036),
    (1.7, 1.6, 20.0, 0.0, 69.22193486307886, 0.0),
    (1.7, 1.6, -50.0, 0.0, -0.013491531624465114, 0.0),
    (1.7, 1.6, 45.0, 0.0, 1829.4828976846675, 0.0),
    (1.7, 1.6, 35.0, 20.0, -546.7257372569823, 441.886377754413),
    (2.0, 1.0, 0.5, 0.0, 1.2605918365213562, 0.0),
    (2.0, 1.0, -1.0, 0.0, 0.5403023058681398, 0.0),
    (2.0, 1.0, 0.0, 2.0, 0.833730025131149, 0.9888977057628651),
    (2.0, 1.0, -3.0, 1.0, -0.19096962775429163, 0.283815313710864),
    (2.0, 1.0, 4.5, -2.0, 3.976737720157943, -1.9228579907573593),
    (2.0, 1.0, -8.0, 0.0, -0.9513631281258474, 0.0),
    (2.0, 1.0, 0.0, 6.0, -0.4679544652025295, 2.702139647641951),
    (2.0, 1.0, -7.0, -7.0, -1.7669616976707196, -0.3528076375123931),
    (2.0, 1.0, -15.0, 0.0, -0.7442462713722907, 0.0),
    (2.0, 1.0, 0.0, 12.0, -4.491927526505996, 3.6681612162735524),
    (2.0, 1.0, -20.0, 5.0, -0.23680971275548945, -0.5713246352353188),
    (2.0, 1.0, 9.0, 9.0, 2.759490656709206, 13.200597003779453),
    (2.0, 1.0, -40.0, 0.0, 0.9991443830469295, 0.0),
    (2.0, 1.0, 0.0, 30.0, -17.901513574521115, -16.051378027206475),
    (2.0, 1.0, -30.0, -30.0, 5.874642972686478, 1.5753867321373114),
    (2.0, 1.0, 20.0, 0.0, 43.77746767480535, 0.0),
    (2.0, 1.0, -50.0, 0.0, 0.7053479063084424, 0.0),
    (2.0, 1.0, 45.0, 0.0, 409.5496913891916, 0.0),
    (2.0, 1.0, 35.0, 20.0, -13.590906079173825, 230.79660977118283),
    (2.0, 0.7, 0.5, 0.0, 1.1105796316286227, 0.0),
    (2.0, 0.7, -1.0, 0.0, 0.18543265815483, 0.0),
    (2.0, 0.7, 0.0, 2.0, 0.5119215559214293, 1.2754280640072195),
    (2.0, 0.7, -3.0, 1.0, -0.6955587825835272, 0.3171257404758083),
    (2.0, 0.7, 4.5, -2.0, 4.822783155509468, -2.764624016604629),
    (2.0, 0.7, -8.0, 0.0, -1.3248096764595427, 0.0),
    (2.0, 0.7, 0.0, 6.0, -1.5019615103412869, 3.3661113268763203),
    (2.0, 0.7, -7.0, -7.0, -2.5150155192460626, 0.1929802540459204),
    (2.0, 0.7, -15.0, 0.0, -0.5253107440641218, 0.0),
    (2.0, 0.7, 0.0, 12.0, -7.602179903961804, 3.726014867676396),
    (2.0, 0.7, -20.0, 5.0, 0.456350483612295, -0.9014256560253473),
    (2.0, 0.7, 9.0, 9.0, 1.7093345437686416, 19.7002076924212),
    (2.0, 0.7, -40.0, 0.0, 1.5220354320770992, 0.0),
    (2.0, 0.7, 0.0, 30.0, -22.736869633734834, -32.93879814942917),
    (2.0, 0.7, -30.0, -30.0, 10.640989973993507, -0.9131979562955015),
    (2.0, 0.7, 20.0, 0.0, 68.59015342166079, 0.0),
    (2.0, 0.7, -50.0, 0.0, 0.5567724390172744, 0.0),
    (2.0, 0.7, 45.0, 0.0, 724.9086215115339, 0.0),
    (2.0, 0.7, 35.0, 20.0, -54.858599481817194, 398.77858991366344),
    (2.0, 1.6, 0.5, 0.0, 1.2578080212548572, 0.0),
    (2.0, 1.6, -1.0, 0.0, 0.865955538895239, 0.0),
    (2.0, 1.6, 0.0, 2.0, 1.054298845749652, 0.5345505633172599),
    (2.0, 1.6, -3.0, 1.0, 0.43432196181345306, 0.18236018022064454),
    (2.0, 1.6, 4.5, -2.0, 2.609631994032816, -0.8844849369214656),
    (2.0, 1.6, -8.0, 0.0, -0.19290294696324994, 0.0),
    (2.0, 1.6, 0.0, 6.0, 0.5430165014280354, 1.5197642187793077),
    (2.0, 1.6, -7.0, -7.0, -0.5226773369571748, -0.5886286354450431),
    (2.0, 1.6, -15.0, 0.0, -0.4494180980084631, 0.0),
    (2.0, 1.6, 0.0, 12.0, -1.082131772043743, 2.4852031421937477),
    (2.0, 1.6, -20.0, 5.0, -0.42916035744395703, -0.1301140857718217),
    (2.0, 1.6, 9.0, 9.0, 2.7075864657382134, 5.676381887500838),
    (2.0, 1.6, -40.0, 0.0, 0.19897636115406026, 0.0),
    (2.0, 1.6, 0.0, 30.0, -8.378698903221595, -2.2403236626306597),
    (2.0, 1.6, -30.0, -30.0, 1.103986097878059, 1.6136518284009511),
    (2.0, 1.6, 20.0, 0.0, 17.83421947951713, 0.0),
    (2.0, 1.6, -50.0, 0.0, 0.30048026195217586, 0.0),
    (2.0, 1.6, 45.0, 0.0, 130.72657787872475, 0.0),
    (2.0, 1.6, 35.0, 20.0, 7.387202439862323, 75.9083422039709),
];

/// (x, Ai(x))
pub const AIRY_CASES: &[(f64, f64)] = &[
    (-20.0, -0.1764061270779847),
    (-17.3, -0.27613432961775747),
    (-14.0, -0.2659834827840778),
    (-11.5, 0.30542297004359265),
    (-9.9, 0.13623502644797944),
    (-8.5, -0.33029023763020887),
    (-8.0, -0.0527050503563862),
    (-7.2, 0.30585152336862664),
    (-6.0, -0.3291451736298231),
    (-5.05, 0.33223833669446223),
    (-4.0, -0.07026553294928951),
    (-3.0, -0.37881429367765806),
    (-2.5, -0.11232506769296609),
    (-1.0, 0.5355608832923521),
    (-0.3, 0.43090309528558085),
    (0.0, 0.3550280538878172),
    (0.4, 0.2547423542956763),
    (1.0, 0.13529241631288141),
    (2.2, 0.025610404421773213),
    (3.0, 0.006591139357460719),
    (4.1, 0.0007736296637815978),
    (5.0, 0.00010834442813607442),
    (5.9, 1.2747094509184477e-05),
    (6.0, 9.947694360252889e-06),
    (6.4, 3.6177623188518e-06),
    (7.5, 1.9172560675134309e-07),
    (8.8, 4.512440519153694e-09),
    (10.0, 1.1047532552898686e-10),
];

/// (re, im, gamma_re, gamma_im)
pub const GAMMA_CASES: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.0, 9.51350769866873, 0.0),
    (0.5, 0.0, 1.772453850905516, 0.0),
    (1.5, 0.0, 0.886226925452758, 0.0),
    (2.7, 0.0, 1.5446858458505939, 0.0),
    (7.25, 0.0, 1155.3810139199898, 0.0),
    (15.5, 0.0, 334838609873.55646, 0.0),
    (29.9, 0.0, 6.304174488373721e+30, 0.0),
    (-0.5, 0.0, -3.544907701811032, 0.0),
    (-3.3, 0.0, 0.43851739219876307, 0.0),
    (-12.7, 0.0, -1.3570129246842738e-09, 0.0),
    (-29.5, 0.0, 6.514182203267233e-32, 0.0),
    (1.0, 2.0, 0.15190400267003615, 0.01980488016185498),
    (-2.5, 0.5, -0.33387520352243233, -0.20645730796360842),
    (3.0, -7.0, -0.004411724185644916, 0.0036521031574413263),
    (12.0, 10.0, 748415.7338125602, 264048.088042649),
    (0.2, -20.0, -3.996935526335862e-15, -2.2828070898421283e-14),
];
