// Generated by tools/gen_tw1_table.py from data/tw1_cdf.csv. Do not edit.
#pragma once

#include <array>

namespace ranklss::detail {

inline constexpr double kTw1GridStart = -8.00;
inline constexpr double kTw1GridStep = 0.01;
inline constexpr std::array<double, 1601> kTw1Cdf = {
    1.8419679305636742e-12, 2.0139098216314856e-12, 2.2015098733605457e-12, 2.4061547962755253e-12,
    2.6293503709724181e-12, 2.8727313301083471e-12, 3.138072030413333e-12, 3.42729797532564e-12,
    3.7424982532919374e-12, 4.0859389615217895e-12, 4.460077690062133e-12, 4.8675791464860043e-12,
    5.3113320072887493e-12, 5.7944670882843522e-12, 6.3203769329131862e-12, 6.8927369244444285e-12,
    7.5155280356043291e-12, 8.1930613372201946e-12, 8.9300043960691208e-12, 9.7314097012947374e-12,
    1.060274526854123e-11, 1.1549927581391083e-11, 1.2579357040815514e-11, 1.3697956105207893e-11,
    1.4913210316203879e-11, 1.623321241895626e-11, 1.7666709799866529e-11, 1.9223155480044602e-11,
    2.0912762919017762e-11, 2.2746564900508086e-11, 2.4736476790499732e-11, 2.68953644773949e-11,
    2.9237117324877858e-11, 3.1776726490239482e-11, 3.4530368984453517e-11, 3.7515497875285561e-11,
    4.0750939061302091e-11, 4.4256995072846916e-11, 4.8055556386035563e-11, 5.2170220767614739e-11,
    5.6626421202315903e-11, 6.1451562990149154e-11, 6.6675170639111562e-11, 7.2329045219076312e-11,
    7.8447432885404294e-11, 8.5067205326105415e-11, 9.2228052934444471e-11, 9.9972691559717591e-11,
    1.0834708374289615e-10, 1.1740067540085197e-10, 1.2718664898339151e-10, 1.3776219419122445e-10,
    1.4918879741077172e-10, 1.6153255109329516e-10, 1.7486448438160691e-10, 1.8926091636775164e-10,
    2.0480383344971304e-10, 2.2158129234476246e-10, 2.3968785041160834e-10, 2.5922502503348578e-10,
    2.8030178391979341e-10, 3.0303506829540072e-10, 3.2755035106429238e-10, 3.5398223215842246e-10,
    3.8247507341359496e-10, 4.1318367545232293e-10, 4.4627399919940428e-10, 4.8192393480941229e-10,
    5.203241209473418e-10, 5.6167881753416486e-10, 6.0620683524879244e-10, 6.54142525267344e-10,
    7.0573683291974173e-10, 7.6125841915370832e-10, 8.2099485391689208e-10, 8.852538858003734e-10,
    9.543647925309959e-10, 1.0286798171572785e-09, 1.1085756950435863e-09, 1.1944552770716114e-09,
    1.2867492547464119e-09, 1.3859179932181073e-09, 1.4924534785594281e-09, 1.6068813859853032e-09,
    1.7297632760638259e-09, 1.8616989263486146e-09, 2.0033288062627953e-09, 2.1553367034837339e-09,
    2.3184525105179253e-09, 2.4934551806160095e-09, 2.6811758626614762e-09, 2.8825012251729059e-09,
    3.0983769800903926e-09, 3.3298116175717624e-09, 3.577880363606835e-09, 3.8437293728663833e-09,
    4.1285801698402466e-09, 4.4337343519853922e-09, 4.7605785693029363e-09, 5.1105897954916028e-09,
    5.4853409065887999e-09, 5.8865065838063752e-09, 6.3158695581012984e-09, 6.7753272148920853e-09,
    7.2668985782387837e-09, 7.7927316947544982e-09, 8.3551114385051783e-09, 8.9564677591881257e-09,
    9.5993843969574549e-09, 1.0286608088389181e-08, 1.1021058289249278e-08, 1.1805837440951247e-08,
    1.2644241808862719e-08, 1.353977292194663e-08, 1.4496149644603315e-08, 1.5517320913021441e-08,
    1.6607479169838763e-08, 1.7771074532477198e-08, 1.9012829732133416e-08, 2.0337755862097211e-08,
    2.1751168975819431e-08, 2.325870757697912e-08, 2.4866351045689962e-08, 2.6580439046957986e-08,
    2.8407691969544027e-08, 3.0355232445514559e-08, 3.2430608002959045e-08, 3.4641814906647451e-08,
    3.6997323243775246e-08, 3.9506103314397335e-08, 4.2177653388716364e-08, 4.5022028896027351e-08,
    4.8049873112872553e-08, 5.1272449420791011e-08, 5.470167520700459e-08, 5.8350157484416829e-08,
    6.2231230310462891e-08, 6.6358994087610428e-08, 7.0748356831693088e-08, 7.5415077497747005e-08,
    8.0375811456628706e-08, 8.5648158219438977e-08, 9.125071151062129e-08, 9.720311179459669e-08,
    1.0352610136489939e-07, 1.1024158210904618e-07, 1.1737267606674166e-07, 1.2494378890354194e-07,
    1.3298067642677928e-07, 1.415105142753471e-07, 1.5056197091991975e-07, 1.6016528411526438e-07,
    1.70352340951592e-07, 1.8115676165730645e-07, 1.9261398731108043e-07, 2.0476137162694646e-07,
    2.1763827698197898e-07, 2.3128617486224613e-07, 2.4574875090891882e-07, 2.6107201475288888e-07,
    2.7730441483279813e-07, 2.9449695839819906e-07, 3.1270333690647747e-07, 3.3198005702934766e-07,
    3.523865774920315e-07, 3.7398545197574695e-07, 3.9684247832182094e-07, 4.2102685428368629e-07,
    4.4661134008102393e-07, 4.7367242801868787e-07, 5.0229051944143573e-07, 5.3255010930425748e-07,
    5.6453997864689454e-07, 5.9835339527027359e-07, 6.3408832292179725e-07, 6.7184763930601869e-07,
    7.1173936324676596e-07, 7.5387689133684353e-07, 7.9837924442133858e-07, 8.453713242710148e-07,
    8.9498418081273352e-07, 9.4735529029445379e-07, 1.0026288447733707e-06, 1.0609560533268086e-06,
    1.1224954553968381e-06, 1.1874132466909748e-06, 1.2558836180731487e-06, 1.3280891078908606e-06,
    1.4042209681968196e-06, 1.4844795453352124e-06, 1.5690746753755423e-06, 1.6582260948894607e-06,
    1.7521638675789324e-06, 1.8511288272768904e-06, 1.9553730378549056e-06, 2.0651602705854775e-06,
    2.180766499520371e-06, 2.3024804154596917e-06, 2.4306039591003464e-06, 2.5654528739664386e-06,
    2.7073572797383525e-06, 2.8566622666110536e-06, 3.0137285113268622e-06, 3.1789329155419993e-06,
    3.352669267201012e-06, 3.535348925607693e-06, 3.7274015308953396e-06, 3.9292757386147465e-06,
    4.1414399801723073e-06, 4.3643832498661943e-06, 4.5986159192825966e-06, 4.8446705798297277e-06,
    5.1031029142015893e-06, 5.3744925975789962e-06, 5.6594442293892902e-06, 5.9585882964620691e-06,
    6.2725821684322329e-06, 6.6021111262570717e-06, 6.9478894247277967e-06, 7.3106613898714611e-06,
    7.6912025521528878e-06, 8.0903208164011705e-06, 8.5088576693983728e-06, 8.9476894260831857e-06,
    9.4077285153351988e-06, 9.8899248063195554e-06, 1.0395266976384127e-05, 1.0924783921515564e-05,
    1.1479546210372366e-05, 1.2060667582925746e-05, 1.2669306494751752e-05, 1.3306667708028565e-05,
    1.3974003930305734e-05, 1.467261750212155e-05, 1.5403862134556973e-05, 1.6169144697822694e-05,
    1.696992706198671e-05, 1.7807727990958505e-05, 1.8684125090854571e-05, 1.9600756813877347e-05,
    2.0559324518847481e-05, 2.1561594589535711e-05, 2.2609400611947769e-05, 2.370464561171847e-05,
    2.4849304352778872e-05, 2.6045425698461269e-05, 2.7295135036213374e-05, 2.8600636767090822e-05,
    2.9964216861202664e-05, 3.138824548028192e-05, 3.2875179668556311e-05, 3.442756611308752e-05,
    3.6048043974751715e-05, 3.7739347791024718e-05, 3.9504310451734293e-05, 4.1345866248936316e-05,
    4.3267054002063107e-05, 4.5271020259485713e-05, 4.7361022577623157e-05, 4.9540432878722047e-05,
    5.1812740888416289e-05, 5.4181557654166119e-05, 5.665061914566028e-05, 5.9223789938253012e-05,
    6.1905066980484199e-05, 6.4698583446720986e-05, 6.7608612675931426e-05, 7.0639572197590198e-05,
    7.3796027845679155e-05, 7.7082697961737592e-05, 8.0504457687877236e-05, 8.4066343350662414e-05,
    8.7773556936714779e-05, 9.1631470660881028e-05, 9.5645631627763679e-05, 9.9821766587388937e-05,
    0.0001041657867857367, 0.00010868379291083408, 0.00011338208013506963, 0.00011826714325433789,
    0.0001233456819245964, 0.00012862460599635526, 0.00013411104094758486, 0.00013981233341547541,
    0.00014573605682743448, 0.00015189001713164499, 0.00015828225862747581, 0.00016492106989594814,
    0.00017181498983044168, 0.00017897281376772869, 0.00018640359971938594, 0.00019411667470355901,
    0.00020212164117700064, 0.00021042838356721897, 0.00021904707490451609, 0.00022798818355362083,
    0.00023726248004455019, 0.0002468810440022546, 0.00025685527117451818, 0.00026719688055752374,
    0.00027791792161840288, 0.0002890307816139956, 0.00030054819300497722, 0.00031248324096442095,
    0.00032484937097976611, 0.00033766039654708162, 0.00035093050695641847, 0.0003646742751669495,
    0.00037890666577050061, 0.00039364304304199445, 0.00040889917907519272, 0.00042469126200207074,
    0.00044103590429400632, 0.00045795015114292152, 0.00047545148892033754, 0.00049355785371227323,
    0.00051228763992773336, 0.00053165970897851281, 0.00055169339802784096, 0.00057240852880534755,
    0.00059382541648567416, 0.00061596487862800465, 0.00063884824417357125, 0.00066249736249819342,
    0.0006869346125166903, 0.00071218291183599138, 0.00073826572595353697, 0.00076520707749754577,
    0.00079303155550555662, 0.00082176432473752886, 0.00085143113501971778, 0.00088205833061532593,
    0.00091367285961793817, 0.00094630228336350247, 0.00097997478585662304, 0.0010147191832066821,
    0.001050564933069309, 0.0010875421440885184, 0.0011256815853347641, 0.0011650146957339967,
    0.0012055735934827503, 0.0012473910854441128, 0.001290500676519377, 0.0013349365789899995,
    0.0013807337218244224, 0.001427927759944168, 0.0014765550834435848, 0.0015266528267573614,
    0.0015782588777700324, 0.0016314118868613542, 0.0016861512758815681, 0.0017425172470502705,
    0.0018005507917726303, 0.0018602936993665495, 0.0019217885656942406, 0.0019850788016917502,
    0.0020502086417896479, 0.0021172231522181744, 0.0021861682391900047, 0.002257090656953788,
    0.0023300380157113385, 0.0024050587893915142, 0.0024822023232736199, 0.0025615188414531854,
    0.00264305945414277, 0.0027268761648005391, 0.0028130218770792219, 0.0029015504015881123,
    0.0029925164624604677, 0.0030859757037189684, 0.003181984695431587, 0.0032806009396504046,
    0.0033818828761256105, 0.0034858898877871934, 0.0035926823059865888, 0.0037023214154907388,
    0.003814869459220719, 0.0039303896427274393, 0.0040489461383966304, 0.0041706040893754884,
    0.0042954296132134097, 0.0044234898052090159, 0.0045548527414560613, 0.0046895874815804451,
    0.0048277640711610224, 0.0049694535438264608, 0.0051147279230209213, 0.0052636602234309637,
    0.0054163244520665623, 0.0055727956089886999, 0.0057331496876766126, 0.0058974636750272905,
    0.0060658155509804605, 0.0062382842877618579, 0.0064149498487381384, 0.0065958931868764989,
    0.0067811962428025495, 0.0069709419424497272, 0.0071652141942940379, 0.0073640978861676089,
    0.0075676788816452486, 0.0077760440159975594, 0.007989281091705264, 0.0082074788735285505,
    0.0084307270831262705, 0.0086591163932193214, 0.0088927384212934123, 0.0091316857228355697,
    0.0093760517841001718, 0.009625931014399354, 0.0098814187379137747, 0.010142611185019038,
    0.010409605483123996, 0.010682499647017092, 0.010961392568717067, 0.011246384006824485,
    0.011537574575371242, 0.011835065732164758, 0.012138959766624532, 0.012449359787108221,
    0.012766369707725414, 0.013090094234636838, 0.013420638851837691, 0.013758109806423191,
    0.014102614093335663, 0.01445425943959191, 0.014813154287990729, 0.015179407780299583,
    0.015553129739920978, 0.015934430654038705, 0.016323421655244155, 0.016720214502643951,
    0.017124921562449696, 0.017537655788051575, 0.017958530699577348, 0.018387660362938828,
    0.018825159368368198, 0.019271142808447078, 0.019725726255630665, 0.020189025739271147,
    0.020661157722143029, 0.021142239076475302, 0.021632387059493656, 0.022131719288478204,
    0.022640353715340907, 0.023158408600728562, 0.023686002487656063, 0.024223254174676499,
    0.024770282688593711, 0.025327207256724427, 0.02589414727871563, 0.02647122229792568,
    0.027058551972375555, 0.02765625604527815, 0.028264454315154175, 0.028883266605542163,
    0.029512812734312169, 0.030153212482591195, 0.030804585563310401, 0.031467051589382969,
    0.032140730041523284, 0.032825740235716439, 0.033522201290349773, 0.034230232093015955,
    0.0349499512669997, 0.035681477137458159, 0.036424927697308089, 0.037180420572829755,
    0.037948072989001297, 0.03872800173457458, 0.039520323126906176, 0.040325152976555131,
    0.041142606551661687, 0.041972798542119286, 0.042815843023554068, 0.043671853421124847,
    0.044540942473158346, 0.045423222194632858, 0.046318803840525231, 0.047227797869035922,
    0.048150313904705706, 0.049086460701440383, 0.05003634610545702, 0.051000077018168166,
    0.05197775935901823, 0.052969498028288625, 0.053975396869885992, 0.054995558634130616,
    0.056030084940559492, 0.057079076240760994, 0.058142631781256518, 0.059220849566445792,
    0.060313826321631139, 0.061421657456138347, 0.062544437026548702, 0.063682257700060307,
    0.064835210717993239, 0.066003385859457364, 0.067186871405196122, 0.068385754101626006,
    0.069600119125085583, 0.070830050046312348, 0.072075628795162494, 0.073336935625590446,
    0.074614049080905187, 0.075907045959318659, 0.077216001279802965, 0.078540988248272173,
    0.079882078224106187, 0.081239340687030134, 0.082612843204367903, 0.084002651398683501,
    0.085408828915827434, 0.086831437393402489, 0.088270536429665022, 0.089726183552876537,
    0.091198434191121905, 0.09268734164260653, 0.094192957046450573, 0.09571532935399138,
    0.097254505300611804, 0.098810529378105985, 0.10038344380759751, 0.10197328851302387,
    0.10358010109520144, 0.10520391680648171, 0.10684476852601479, 0.10850268673563086,
    0.11017769949635291, 0.111869832425554, 0.11357910867476752, 0.11530554890816687,
    0.11704917128172235, 0.11880999142304831, 0.12058802241194928, 0.12238327476167829,
    0.12419575640091482, 0.12602547265647493, 0.12787242623675965, 0.12973661721595395,
    0.13161804301898317, 0.13351669840723737, 0.13543257546506798, 0.13736566358706903,
    0.13931594946614614, 0.14128341708238423, 0.14326804769271745, 0.14526981982140855,
    0.14728870925134396, 0.14932468901615104, 0.15137772939313981, 0.15344779789707669,
    0.15553485927479238, 0.1576388755006293, 0.15975980577273266, 0.16189760651018581,
    0.1640522313509945, 0.16622363115092201, 0.16841175398317867, 0.17061654513896299,
    0.17283794712886058, 0.17507589968509754, 0.17733033976465171, 0.17960120155321954,
    0.18188841647004048, 0.18419191317357314, 0.18651161756802864, 0.18884745281075502,
    0.19119933932047167, 0.19356719478635054, 0.19595093417794354, 0.19835046975594969,
    0.20076571108382199, 0.20319656504020706, 0.2056429358322138, 0.20810472500950614,
    0.21058183147921772, 0.21307415152167825, 0.2155815788069475, 0.21810400441215258,
    0.22064131683961802, 0.22319340203578633, 0.22576014341091746, 0.22834142185956205,
    0.23093711578179724, 0.23354710110522303, 0.23617125130770339, 0.23880943744084754,
    0.24146152815421945, 0.24412738972026773, 0.2468068860599654, 0.249499878769149,
    0.2522062271455473, 0.25492578821648659, 0.25765841676726281, 0.26040396537017191,
    0.26316228441418149, 0.26593322213523579, 0.26871662464717833, 0.27151233597328472,
    0.27432019807838742, 0.27714005090158472, 0.27997173238951695, 0.28281507853019777,
    0.28566992338738739, 0.28853609913549461, 0.29141343609499321, 0.29430176276833708,
    0.29720090587636211, 0.30011069039515875, 0.3030309395934016, 0.30596147507012161,
    0.30890211679290475, 0.31185268313650361, 0.314812990921844, 0.31778285545541574,
    0.3207620905690286, 0.32375050865992028, 0.32674792073119852, 0.32975413643260398,
    0.33276896410157653, 0.33579221080461069, 0.33882368237888416, 0.34186318347414152,
    0.34491051759482089, 0.34796548714240394, 0.35102789345797542, 0.35409753686497719,
    0.35717421671213789, 0.36025773141656464, 0.36334787850697997, 0.36644445466708825,
    0.36954725577905556, 0.37265607696708808, 0.3757707126410918, 0.37889095654039834,
    0.38201660177754188, 0.38514744088207081, 0.38828326584437861, 0.39142386815953994,
    0.3945690388711332, 0.39771856861503829, 0.40087224766319185, 0.40402986596728491,
    0.40719121320239021, 0.41035607881050201, 0.41352425204397514, 0.41669552200884669,
    0.41986967770802963, 0.42304650808436012, 0.42622580206348681, 0.4294073485965878,
    0.43259093670290139, 0.43577635551205623, 0.43896339430618864, 0.4421518425618326,
    0.44534148999157069, 0.44853212658543234, 0.4517235426520268, 0.45491552885939779,
    0.4581078762755903, 0.46130037640891275, 0.46449282124788505, 0.4676850033008631,
    0.47087671563532696, 0.4740677519168186, 0.47725790644752247, 0.48044697420447441,
    0.48363475087739177, 0.48682103290611217, 0.49000561751763322, 0.49318830276273901,
    0.49636888755221409, 0.49954717169261725, 0.50272295592162308, 0.5058960419429186,
    0.50906623246064364, 0.51223333121336623, 0.51539714300758599, 0.51855747375075878,
    0.52171413048383408, 0.52486692141329927, 0.52801565594272126, 0.53116014470378736,
    0.53430019958682229, 0.53743563377078318, 0.54056626175273859, 0.54369189937681217,
    0.54681236386258825, 0.54992747383297436, 0.55303704934151476, 0.55614091189915327,
    0.55923888450044179, 0.56233079164918576, 0.56541645938353169, 0.56849571530048704,
    0.57156838857984715, 0.57463431000757337, 0.57769331199859042, 0.58074522861900135,
    0.58378989560771988, 0.58682715039751709, 0.58985683213548379, 0.59287878170290698,
    0.59589284173455981, 0.59889885663739739, 0.60189667260868829, 0.6048861376535003,
    0.60786710160163426, 0.61083941612396853, 0.61380293474820735, 0.61675751287403435,
    0.61970300778767473, 0.6226392786758681, 0.62556618663925467, 0.62848359470517812,
    0.63139136783989191, 0.6342893729602217, 0.63717747894458487, 0.64005555664344849,
    0.64292347888923518, 0.64578112050564507, 0.64862835831639898, 0.65146507115340946,
    0.65429113986438292, 0.6571064473198609, 0.65991087841970408, 0.66270432009901803,
    0.66548666133353618, 0.66825779314445866, 0.67101760860268489, 0.67376600283257138,
    0.67650287301514567, 0.67922811839078012, 0.68194164026133297, 0.68464334199176502,
    0.68733312901123966, 0.69001090881371407, 0.69267659095802858, 0.69533008706747879,
    0.69797131082895203, 0.70060017799146002, 0.7032166063642562, 0.70582051581448524,
    0.70841182826434823, 0.71099046768779262, 0.7135563601067374, 0.71610943358684298,
    0.71864961823283502, 0.72117684618339362, 0.72369105160559288, 0.72619217068895769,
    0.72868014163903316, 0.7311549046705369, 0.73361640200015488, 0.7360645778389201,
    0.738499378384189, 0.74092075181122219, 0.74332864826438194, 0.74572301984795819,
    0.74810382061663272, 0.75047100656558186, 0.75282453562023433, 0.75516436762569394,
    0.75749046433574629, 0.75980278940161394, 0.76210130836037937, 0.7643859886230806,
    0.76665679946249066, 0.76891371200059189, 0.77115669919575691, 0.77338573582964643,
    0.77560079849383279, 0.7778018655761384, 0.7799889172467569, 0.78216193544401336,
    0.78432090385994768, 0.78646580792565746, 0.78859663479639408, 0.79071337333642389,
    0.79281601410366287, 0.79490454933409893, 0.79697897292600883, 0.79903928042398376,
    0.80108546900274691, 0.80311753745083059, 0.80513548615399511, 0.80713931707851938,
    0.8091290337543412, 0.81110464125803161, 0.81306614619561157, 0.81501355668522224,
    0.81694688233965751, 0.81886613424876964, 0.8207713249617562, 0.82266246846932267,
    0.82453958018576057, 0.82640267693087666, 0.82825177691184348, 0.83008689970497551,
    0.83190806623741376, 0.83371529876872852, 0.83550862087244726, 0.83728805741751688,
    0.83905363454970849, 0.84080537967297198, 0.84254332143073984, 0.84426748968720011,
    0.8459779155085112, 0.84767463114399666, 0.84935767000732432, 0.85102706665766115,
    0.85268285678081435, 0.85432507717036144, 0.8559537657087789, 0.8575689613485743,
    0.85917070409342788, 0.86075903497934658, 0.86233399605583572, 0.86389563036709072,
    0.8654439819332187, 0.86697909573149434, 0.86850101767765142, 0.87000979460721561,
    0.87150547425688385, 0.87298810524595405, 0.87445773705781027, 0.87591442002146813,
    0.87735820529318109, 0.87878914483811399, 0.88020729141209531, 0.88161269854343749,
    0.88300542051483588, 0.88438551234535345, 0.88575302977249226, 0.88710802923435472,
    0.8884505678518988, 0.88978070341128901, 0.8910984943463508, 0.89240399972111406,
    0.89369727921248843, 0.8949783930930344, 0.89624740221384291, 0.89750436798753297,
    0.89874935237136988, 0.89998241785050548, 0.90120362742134186, 0.90241304457501892,
    0.9036107332810327, 0.90479675797097636, 0.90597118352242001, 0.90713407524294254,
    0.90828549885427723, 0.90942552047660052, 0.91055420661296715, 0.91167162413388969,
    0.9127778402620651, 0.91387292255724573, 0.91495693890125718, 0.91602995748317018,
    0.91709204678460332, 0.91814327556522379, 0.91918371284837153, 0.92021342790683625,
    0.92123249024879694, 0.92224096960392421, 0.92323893590964123, 0.92422645929754677,
    0.92520361007999419, 0.92617045873683634, 0.92712707590231958, 0.92807353235215972,
    0.92900989899079234, 0.92993624683876019, 0.93085264702027348, 0.93175917075093984,
    0.93265588932566512, 0.93354287410672088, 0.93442019651197639, 0.93528792800329574,
    0.93614614007510843, 0.93699490424311938, 0.93783429203324553, 0.938664374970681,
    0.9394852245691262, 0.94029691232019141, 0.9410995096829724, 0.94189308807379601,
    0.94267771885613272, 0.94345347333067342, 0.9442204227255715, 0.94497863818685202,
    0.94572819076897041, 0.9464691514255914, 0.9472015910004844, 0.94792558021858764,
    0.94864118967724276, 0.94934848983759668, 0.950047551016169, 0.95073844337657998,
    0.95142123692143843, 0.95209600148438778, 0.9527628067223145, 0.95342172210769349,
    0.95407281692115453, 0.95471616024415562, 0.95535182095181326, 0.95597986770589571,
    0.95660036894797573, 0.95721339289273821, 0.95781900752144122, 0.95841728057552655,
    0.95900827955037582, 0.95959207168922911, 0.96016872397721009, 0.96073830313556141,
    0.9613008756160063, 0.96185650759523189, 0.96240526496952294, 0.96294721334954392,
    0.96348241805526469, 0.96401094411102872, 0.96453285624075835, 0.96504821886329484,
    0.9655570960878711, 0.96605955170973234, 0.96655564920584602, 0.9670454517308158,
    0.96752902211289105, 0.96800642285009286, 0.96847771610647382, 0.96894296370850874,
    0.9694022271416135, 0.96985556754678837, 0.97030304571738357, 0.97074472209598306,
    0.97118065677140442, 0.97161090947582585, 0.97203553958200428, 0.97245460610064482,
    0.97286816767787698, 0.97327628259282439, 0.97367900875528957, 0.97407640370355209,
    0.97446852460227606, 0.97485542824052518, 0.97523717102988228, 0.97561380900267058,
    0.97598539781027405, 0.97635199272156226, 0.97671364862140375, 0.97707042000929256,
    0.97742236099807034, 0.9777695253127302, 0.97811196628931674, 0.97844973687391978,
    0.97878288962175963, 0.97911147669636123, 0.97943554986881542, 0.97975516051712386,
    0.9800703596256275, 0.9803811977845206, 0.98068772518943781, 0.98098999164113809,
    0.98128804654525481, 0.98158193891212231, 0.98187171735668, 0.98215743009845169,
    0.98243912496159891, 0.98271684937504467, 0.98299065037266742, 0.98326057459356153,
    0.98352666828236834, 0.98378897728966752, 0.98404754707244246, 0.984302422694603,
    0.98455364882756879, 0.98480126975091486, 0.98504532935307731, 0.98528587113211685,
    0.9855229381965398, 0.98575657326617283, 0.98598681867309279, 0.98621371636260891,
    0.98643730789429629, 0.98665763444308385, 0.98687473680038706, 0.98708865537528856,
    0.98729943019576838, 0.98750710090997784, 0.98771170678755982, 0.9879132867210112,
    0.98811187922708654, 0.98830752244824482, 0.98850025415413323, 0.98869011174311427,
    0.98887713224382678, 0.98906135231678416, 0.98924280825600874, 0.98942153599070104,
    0.9895975710869418, 0.98977094874942695, 0.98994170382323321, 0.99010987079561497,
    0.99027548379782904, 0.99043857660699008, 0.9905991826479521, 0.99075733499521546,
    0.99091306637486143, 0.99106640916650923, 0.99121739540529918, 0.99136605678389655,
    0.99151242465451805, 0.99165653003097931, 0.99179840359076199, 0.99193807567710168,
    0.99207557630109244, 0.99221093514380954, 0.99234418155844917, 0.99247534457248399,
    0.99260445288983401, 0.9927315348930521, 0.99285661864552244, 0.99297973189367195,
    0.99310090206919499, 0.99322015629128835, 0.9933375213688973, 0.99345302380297162,
    0.99356668978873064, 0.99367854521793797, 0.99378861568118315, 0.99389692647017125,
    0.99400350258001868, 0.99410836871155495, 0.99421154927363131, 0.99431306838543232,
    0.99441294987879303, 0.99451121730051861, 0.99460789391470827, 0.99470300270508116,
    0.99479656637730463, 0.99488860736132301, 0.99497914781368846, 0.99506820961989129,
    0.99515581439669121, 0.99524198349444759, 0.99532673799944749, 0.99541009873623409,
    0.99549208626993191, 0.99557272090856985, 0.99565202270540176, 0.99573001146122331,
    0.99580670672668481, 0.99588212780460028, 0.99595629375225303, 0.99602922338369448,
    0.99610093527203858, 0.99617144775175037, 0.99624077892092888, 0.9963089466435836,
    0.99637596855190391, 0.9964418620485217, 0.99650664430876634, 0.99657033228291203,
    0.99663294269841807, 0.99669449206215976, 0.9967549966626511, 0.99681447257225775,
    0.99687293564940282, 0.99693040154076173, 0.99698688568344818, 0.99704240330718974,
    0.99709696943649362, 0.99715059889280111, 0.99720330629663367, 0.99725510606972678,
    0.99730601243715244, 0.99735603942943074, 0.99740520088463003, 0.99745351045045638,
    0.9975009815863306, 0.99754762756545301, 0.99759346147685668, 0.99763849622744794,
    0.99768274454403394, 0.99772621897534031, 0.99776893189401361, 0.99781089549861102,
    0.99785212181557748, 0.99789262270121037, 0.9979324098436102, 0.9979714947646191,
    0.99800988882174479, 0.99804760321007124, 0.99808464896415638, 0.99812103695991372,
    0.99815677791648449, 0.99819188239809387, 0.99822636081589144, 0.9982602234297796,
    0.99829348035022714, 0.99832614154006982, 0.99835821681629611, 0.99838971585181879,
    0.99842064817723197, 0.99845102318255474, 0.99848085011895826, 0.99851013810048084,
    0.99853889610572955, 0.99856713297956456, 0.99859485743477028, 0.99862207805371117,
    0.99864880328997496, 0.99867504147000041, 0.99870080079469092, 0.99872608934101326,
    0.99875091506358216, 0.99877528579623043, 0.9987992092535628, 0.99882269303249926,
    0.99884574461380238, 0.9988683713635883, 0.9988905805348246, 0.99891237926881404,
    0.99893377459666399, 0.99895477344074235, 0.99897538261611796, 0.99899560883198724,
    0.99901545869308672, 0.99903493870109084, 0.99905405525599611, 0.99907281465749298,
    0.99909122310632126, 0.99910928670561183, 0.99912701146221528, 0.9991444032880159,
    0.99916146800123351, 0.99917821132771012, 0.99919463890218374, 0.99921075626954747,
    0.99922656888609607, 0.99924208212075782, 0.99925730125631551, 0.99927223149061239,
    0.99928687793774384, 0.99930124562923694, 0.99931533951521745, 0.99932916446556264,
    0.99934272527104251, 0.99935602664444723, 0.99936907322170088, 0.99938186956296426,
    0.99939442015372282, 0.9994067294058655, 0.99941880165874764, 0.99943064118024283,
    0.99944225216778171, 0.99945363874937987, 0.99946480498465262, 0.99947575486581786,
    0.99948649231868725, 0.99949702120364525, 0.999507345316615, 0.9995174683900151,
    0.9995273940937035, 0.99953712603590938, 0.99954666776415313, 0.99955602276615674,
    0.9995651944707411, 0.99957418624871364, 0.99958300141374379, 0.99959164322322813,
    0.99960011487914369, 0.99960841952889057, 0.999616560266126, 0.99962454013158464,
    0.99963236211389028, 0.99964002915035566, 0.99964754412777379, 0.99965490988319738,
    0.99966212920470932, 0.9996692048321818, 0.99967613945802691, 0.9996829357279351,
    0.99968959624160714, 0.9996961235534737, 0.99970252017340611, 0.99970878856741752,
    0.99971493115835464, 0.9997209503265807, 0.99972684841064907, 0.99973262770796623,
    0.99973829047544793, 0.99974383893016461, 0.99974927524997881, 0.9997546015741744,
    0.99975982000407526, 0.99976493260365695, 0.99976994140014896, 0.9997748483846296,
    0.99977965551261172, 0.99978436470462029, 0.99978897784676168, 0.99979349679128526,
    0.99979792335713735, 0.99980225933050659, 0.99980650646536162, 0.99981066648398109,
    0.99981474107747625, 0.99981873190630588, 0.99982264060078418, 0.99982646876158066,
    0.99983021796021243, 0.99983388973953047, 0.9998374856141985, 0.99984100707116386,
    0.99984445557012225, 0.99984783254397547, 0.99985113939928216, 0.99985437751670259,
    0.99985754825143558, 0.99986065293365034, 0.99986369286891008, 0.99986666933859092,
    0.99986958360029399, 0.99987243688825067, 0.99987523041372206, 0.99987796536539286,
    0.99988064290975831, 0.99988326419150664, 0.99988583033389378, 0.99988834243911395,
    0.9998908015886635, 0.9998932088436997, 0.99989556524539436, 0.99989787181528023,
    0.99990012955559415, 0.99990233944961338, 0.99990450246198725, 0.99990661953906379,
    0.99990869160921081, 0.9999107195831316, 0.9999127043541769, 0.9999146467986505,
    0.99991654777611139, 0.99991840812966915, 0.99992022868627672, 0.99992201025701744,
    0.99992375363738706, 0.99992545960757284, 0.99992712893272595, 0.99992876236323114,
    0.99993036063497143, 0.99993192446958912, 0.99993345457474103, 0.9999349516443512,
    0.99993641635885866, 0.99993784938546126, 0.99993925137835571, 0.99994062297897357,
    0.99994196481621289, 0.99994327750666667, 0.99994456165484746, 0.99994581785340786,
    0.99994704668335743, 0.99994824871427623, 0.99994942450452473, 0.99995057460144987,
    0.99995169954158858, 0.99995279985086627, 0.99995387604479358, 0.99995492862865898,
    0.99995595809771853, 0.99995696493738162, 0.99995794962339479, 0.99995891262202097,
    0.99995985439021695, 0.99996077537580741, 0.99996167601765551, 0.9999625567458309,
    0.9999634179817749, 0.99996426013846285, 0.9999650836205638, 0.99996588882459636,
    0.99996667613908363, 0.99996744594470388, 0.99996819861443942, 0.99996893451372282,
    0.99996965400058024, 0.99997035742577245, 0.99997104513293311, 0.99997171745870561,
    0.99997237473287603, 0.99997301727850474, 0.99997364541205536, 0.99997425944352147,
    0.9999748596765512, 0.99997544640856939, 0.99997601993089769, 0.99997658052887228,
    0.9999771284819603, 0.99997766406387301, 0.99997818754267753, 0.99997869918090698,
    0.99997919923566769, 0.99997968795874514, 0.99998016559670821, 0.99998063239101065,
    0.9999810885780912, 0.99998153438947224, 0.99998197005185629, 0.99998239578722048,
    0.99998281181290971, 0.99998321834172799, 0.9999836155820282, 0.99998400373779983,
    0.99998438300875547, 0.99998475359041594, 0.99998511567419268, 0.99998546944747013,
    0.999985815093686, 0.99998615279240932, 0.99998648271941815, 0.99998680504677506,
    0.99998711994290179, 0.99998742757265169, 0.99998772809738223, 0.99998802167502432,
    0.99998830846015174, 0.99998858860404871, 0.99998886225477623, 0.99998912955723729,
    0.99998939065324077, 0.99998964568156379, 0.99998989477801348, 0.99999013807548731,
    0.99999037570403237, 0.99999060779090299, 0.99999083446061809, 0.99999105583501668,
    0.99999127203331306, 0.99999148317215025, 0.99999168936565286, 0.99999189072547845,
    0.99999208736086842, 0.99999227937869795, 0.99999246688352428, 0.99999264997763504,
    0.99999282876109452, 0.9999930033317902, 0.99999317378547736, 0.99999334021582376,
    0.99999350271445242, 0.99999366137098455, 0.99999381627308115, 0.99999396750648339,
    0.99999411515505321, 0.99999425930081243, 0.9999944000239811, 0.99999453740301492,
    0.99999467151464305, 0.99999480243390371, 0.99999493023417974, 0.99999505498723351,
    0.99999517676324134, 0.99999529563082645, 0.99999541165709194, 0.9999955249076532,
    0.99999563544666903, 0.99999574333687258, 0.99999584863960167, 0.99999595141482844,
    0.99999605172118844, 0.99999614961600869, 0.99999624515533625, 0.99999633839396496,
    0.99999642938546229, 0.99999651818219581, 0.9999966048353589, 0.99999668939499564,
    0.99999677191002556, 0.99999685242826786, 0.99999693099646525, 0.99999700766030686,
    0.99999708246445118, 0.99999715545254797, 0.99999722666726043, 0.99999729615028632,
    0.99999736394237915, 0.99999743008336828, 0.99999749461217913, 0.99999755756685282,
    0.99999761898456574, 0.9999976789016477, 0.99999773735360109, 0.99999779437511838,
    0.99999785000010033, 0.9999979042616729, 0.99999795719220419, 0.99999800882332168,
    0.99999805918592777, 0.99999810831021596, 0.99999815622568655, 0.99999820296116193,
    0.99999824854480135, 0.99999829300411547, 0.99999833636598123, 0.99999837865665531,
    0.99999841990178784, 0.99999846012643645, 0.99999849935507867, 0.99999853761162538,
    0.99999857491943323, 0.99999861130131684, 0.99999864677956085, 0.99999868137593229,
    0.99999871511169136, 0.99999874800760336, 0.99999878008394938, 0.99999881136053748,
    0.99999884185671295, 0.99999887159136902, 0.99999890058295671, 0.99999892884949504,
    0.99999895640858083, 0.99999898327739778, 0.99999900947272613, 0.99999903501095178,
    0.99999905990807514, 0.99999908417971972, 0.9999991078411411, 0.99999913090723458,
    0.99999915339254397, 0.99999917531126936, 0.99999919667727499, 0.99999921750409682,
    0.99999923780494993, 0.99999925759273611, 0.99999927688005086, 0.99999929567919033,
    0.99999931400215825, 0.9999993318606728, 0.99999934926617284, 0.99999936622982433,
    0.99999938276252709, 0.99999939887492018, 0.99999941457738861, 0.99999942988006874,
    0.9999994447928543, 0.99999945932540157, 0.99999947348713536, 0.99999948728725407,
    0.9999995007347352, 0.99999951383834018, 0.99999952660661939, 0.99999953904791739,
    0.9999995511703772, 0.9999995629819457, 0.99999957449037724, 0.99999958570323921,
    0.99999959662791549, 0.99999960727161119, 0.99999961764135681, 0.99999962774401241,
    0.99999963758627097, 0.99999964717466339, 0.99999965651556144, 0.99999966561518172,
    0.99999967447958937, 0.99999968311470167, 0.99999969152629153, 0.9999996997199907,
    0.99999970770129321, 0.99999971547555899, 0.99999972304801632, 0.99999973042376544,
    0.9999997376077816, 0.99999974460491781, 0.99999975141990793, 0.99999975805736918,
    0.99999976452180539, 0.99999977081760938, 0.99999977694906561, 0.99999978292035285,
    0.99999978873554674, 0.99999979439862208, 0.99999979991345544, 0.99999980528382748,
    0.99999981051342512, 0.99999981560584383, 0.99999982056458991, 0.99999982539308263,
    0.99999983009465609, 0.99999983467256182, 0.99999983912997004, 0.99999984346997206,
    0.99999984769558226, 0.9999998518097396, 0.99999985581530981, 0.99999985971508687,
    0.99999986351179493, 0.99999986720808987, 0.99999987080656116, 0.99999987430973314,
    0.99999987772006693, 0.99999988103996185, 0.9999998842717569, 0.99999988741773216,
    0.99999989048011051, 0.99999989346105855, 0.99999989636268838, 0.99999989918705889,
    0.99999990193617694, 0.9999999046119985, 0.99999990721643017, 0.99999990975133046,
    0.99999991221851059, 0.99999991461973581, 0.99999991695672674, 0.99999991923116038,
    0.99999992144467076, 0.9999999235988507, 0.99999992569525242, 0.99999992773538859,
    0.99999992972073315, 0.99999993165272261, 0.99999993353275674, 0.99999993536219967,
    0.99999993714238045, 0.99999993887459426, 0.99999994056010311, 0.99999994220013666,
    0.99999994379589296, 0.99999994534853942, 0.99999994685921334, 0.99999994832902295,
    0.99999994975904782, 0.99999995115033979, 0.99999995250392359, 0.99999995382079754,
    0.99999995510193429, 0.9999999563482812, 0.99999995756076132, 0.99999995874027359,
    0.99999995988769397, 0.99999996100387567, 0.99999996208964959, 0.99999996314582529,
    0.99999996417319115, 0.99999996517251533, 0.99999996614454578, 0.99999996709001104,
    0.99999996800962077, 0.99999996890406617, 0.99999996977402017, 0.99999997062013835,
    0.9999999714430593, 0.99999997224340464, 0.9999999730217799, 0.9999999737787747,
    0.99999997451496336, 0.99999997523090478, 0.99999997592714385, 0.99999997660421036,
    0.99999997726262102, 0.9999999779028782, 0.99999997852547162, 0.99999997913087779,
    0.99999997971956089, 0.99999998029197257, 0.99999998084855302, 0.99999998138973034,
    0.99999998191592154, 0.99999998242753274, 0.99999998292495906, 0.99999998340858542,
    0.99999998387878619, 0.99999998433592618, 0.99999998478036034, 0.99999998521243427,
    0.99999998563248438, 0.99999998604083795, 0.99999998643781396, 0.99999998682372249,
    0.99999998719886551, 0.99999998756353714, 0.99999998791802336, 0.99999998826260261,
    0.99999998859754591, 0.99999998892311726, 0.99999998923957312, 0.9999999895471634,
    0.99999998984613137, 0.99999999013671359, 0.99999999041914034, 0.99999999069363577,
    0.99999999096041803, 0.9999999912196994, 0.99999999147168628, 0.99999999171657961,
    0.99999999195457512,
};

}  // namespace ranklss::detail
