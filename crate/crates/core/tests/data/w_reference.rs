pub const W_REF: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.0, 1.0, 0.0),
    (0.0, 1e-10, 0.9999999998871620833, 0.0),
    (0.0, 0.001, 0.9988726200811514086, 0.0),
    (0.0, 0.2, 0.80901951990158073283, 0.0),
    (0.0, 0.8, 0.48910058922311470764, 0.0),
    (0.0, 1.5, 0.32158541645431750235, 0.0),
    (0.0, 3.0, 0.17900115118138995042, 0.0),
    (0.0, 4.4, 0.12514165553814489996, 0.0),
    (0.0, 6.0, 0.092776567800538354389, 0.0),
    (0.0, 9.0, 0.062307724037774684147, 0.0),
    (0.0, 25.0, 0.022549572432641358944, 0.0),
    (0.0, 150.0, 0.00376118031224799193, 0.0),
    (1e-08, 0.0, 0.9999999999999999, 1.1283791670955125223e-8),
    (1e-08, 1e-10, 0.9999999998871619833, 1.1283791668955125223e-8),
    (1e-08, 0.001, 0.99887262008115130883, 1.1263814218553502196e-8),
    (1e-08, 0.2, 0.80901951990158066802, 8.0477135913488023463e-9),
    (1e-08, 0.8, 0.4891005892231146864, 3.4581822433852899374e-9),
    (1e-08, 1.5, 0.32158541645431749474, 1.6362291773256006696e-9),
    (1e-08, 3.0, 0.17900115118138994883, 5.437226000717287207e-10),
    (1e-08, 4.4, 0.12514165553814489938, 2.7132598359837365796e-10),
    (1e-08, 6.0, 0.092776567800538354148, 1.5060353489052321499e-10),
    (1e-08, 9.0, 0.062307724037774684072, 6.8401344155682593935e-11),
    (1e-08, 25.0, 0.02254957243264135894, 9.0054546344462673463e-12),
    (1e-08, 150.0, 0.00376118031224799193, 2.5073421114994900015e-13),
    (0.05, 0.0, 0.99750312239746012376, 0.056325020721986800948),
    (0.05, 1e-10, 0.99750312228518545727, 0.056325020712011769725),
    (0.05, 0.001, 0.99638136750378803573, 0.056225382772591766585),
    (0.05, 0.2, 0.80740109938111079558, 0.040182354020417868344),
    (0.05, 0.8, 0.48856984479754023943, 0.017276264817310468094),
    (0.05, 1.5, 0.32139512243359762885, 0.0081770311310603012237),
    (0.05, 3.0, 0.178961447896179017, 0.0027180531727541841927),
    (0.05, 4.4, 0.12512726150838602483, 0.0013564802317715130217),
    (0.05, 6.0, 0.092770532057593424905, 0.00075296987132502629633),
    (0.05, 9.0, 0.062305857806653588275, 0.00034199659559339932131),
    (0.05, 25.0, 0.022549482593381839615, 0.00004502709406458300879),
    (0.05, 150.0, 0.0037611798943855414574, 1.2536709164746401867e-6),
    (0.3, 0.0, 0.91393118527122819284, 0.31891568277156585871),
    (0.3, 1e-10, 0.9139311851775252171, 0.3189156827167299876),
    (0.3, 0.001, 0.9129949044329831957, 0.31836792356993140747),
    (0.3, 0.2, 0.75289479013687920895, 0.22965315234906994469),
    (0.3, 0.8, 0.47045213667743117256, 0.1006466751983726802),
    (0.3, 1.5, 0.31483881885416350615, 0.048210102207299862925),
    (0.3, 3.0, 0.17758140381831553054, 0.01619151642349221016),
    (0.3, 4.4, 0.12462538783774432372, 0.0081075625528814244772),
    (0.3, 6.0, 0.092559751568528550299, 0.0045078024247133273186),
    (0.3, 9.0, 0.062240608471617326062, 0.0020498554978223058794),
    (0.3, 25.0, 0.022546338668796172809, 0.0002701249571496947251),
    (0.3, 150.0, 0.0037611652692582637273, 7.5219962511927823881e-6),
    (1.0, 0.0, 0.3678794411714423216, 0.60715770584139372912),
    (1.0, 1e-10, 0.36787944118003594605, 0.60715770576781784089),
    (1.0, 0.001, 0.36796500994105384784, 0.60642246793531738711),
    (1.0, 0.2, 0.3731529138584106255, 0.47899144857076033045),
    (1.0, 0.8, 0.32544619109750486437, 0.25202388883780389663),
    (1.0, 1.5, 0.25712793927122836318, 0.13524227699550782709),
    (1.0, 3.0, 0.16426113639298619924, 0.05019713513524859062),
    (1.0, 4.4, 0.11961849922121245507, 0.025982146287744052242),
    (1.0, 6.0, 0.090420611810599919233, 0.014686964935703152473),
    (1.0, 9.0, 0.061569850723632368552, 0.0067600578371657501307),
    (1.0, 25.0, 0.022513693583265216609, 0.00089911486563682045443),
    (1.0, 150.0, 0.0037610131746760862218, 0.000025072306963538012264),
    (2.5, 0.0, 0.0019304541362277092422, 0.25172302461185758322),
    (2.5, 1e-10, 0.0019304541492513048384, 0.25172302461089235615),
    (2.5, 0.001, 0.0020606678557085471494, 0.25171329850488508195),
    (2.5, 0.2, 0.02684058866268768096, 0.24709161970573620972),
    (2.5, 0.8, 0.082111499600362972927, 0.21261435308749905291),
    (2.5, 1.5, 0.11123345956255826876, 0.16323674719804184132),
    (2.5, 3.0, 0.11287798255948907746, 0.088283064985171052962),
    (2.5, 4.4, 0.096789771003399572477, 0.052970676474569486847),
    (2.5, 6.0, 0.079722010717999614242, 0.032465234042006170802),
    (2.5, 9.0, 0.057960584554894695921, 0.015920167008672067216),
    (2.5, 25.0, 0.022327181513434404635, 0.0022291948803120741165),
    (2.5, 150.0, 0.0037601359460494851549, 0.000062666148230863941012),
    (4.0, 0.0, 1.1253517471925911451e-7, 0.14595358990015278327),
    (4.0, 1e-10, 1.1253909967446968545e-7, 0.14595358990015269324),
    (4.0, 0.001, 0.000039362080505906571918, 0.14595357795526261511),
    (4.0, 0.2, 0.00782373554065945245, 0.14551335871372633897),
    (4.0, 0.8, 0.02982676939197307539, 0.13928203997846462459),
    (4.0, 1.5, 0.049867846947185584787, 0.1252675320545430226),
    (4.0, 3.0, 0.069790961649648310052, 0.089340000240364915362),
    (4.0, 4.4, 0.070958664192394797355, 0.062722460864156038522),
    (4.0, 6.0, 0.065222605245691746958, 0.042666047576572986498),
    (4.0, 9.0, 0.052253529904883477588, 0.022988834038465039522),
    (4.0, 25.0, 0.021988852098077106993, 0.003512748141763539147),
    (4.0, 150.0, 0.0037585078922755623436, 0.00010022242625849080569),
    (5.5, 0.0, 7.2877240958196924193e-14, 0.10436743643678120788),
    (5.5, 1e-10, 2.0391406118662682733e-12, 0.10436743643678120788),
    (5.5, 0.001, 0.000019662633041196589634, 0.10436743265973159164),
    (5.5, 0.2, 0.0039266104349453830086, 0.10421659175868454246),
    (5.5, 0.8, 0.01536055720530266786, 0.10200933681038256891),
    (5.5, 1.5, 0.027204250372622598573, 0.096554951590952208382),
    (5.5, 3.0, 0.044292049524231680787, 0.079104117696461911906),
    (5.5, 4.4, 0.050757865802518332276, 0.062171438300012440976),
    (5.5, 6.0, 0.051404939719195943523, 0.046417552036098958031),
    (5.5, 9.0, 0.045657350629558032324, 0.027654089486425283458),
    (5.5, 25.0, 0.021512363281471363493, 0.0047255225517117971842),
    (5.5, 150.0, 0.0037561309632482708845, 0.00013771868977862181663),
    (6.3, 0.0, 5.7923128853948708879e-18, 0.090727659684127367864),
    (6.3, 1e-10, 1.478940284762108344e-12, 0.090727659684127367864),
    (6.3, 0.001, 0.000014789344514165287504, 0.090727657238914097558),
    (6.3, 0.2, 0.0029545901962430897709, 0.090629962920300243963),
    (6.3, 0.8, 0.011625278092768425692, 0.089190822517314733595),
    (6.3, 1.5, 0.020885084632642033308, 0.085557335886361793173),
    (6.3, 3.0, 0.03558943197292260018, 0.073179001061719860778),
    (6.3, 4.4, 0.042641441833623788289, 0.060018251452217617432),
    (6.3, 6.0, 0.045042504968131557595, 0.046673412154787850514),
    (6.3, 9.0, 0.042124673463112315454, 0.029245360392540771412),
    (6.3, 25.0, 0.021207889279004099504, 0.0053363749058279563158),
    (6.3, 150.0, 0.0037545580066605003434, 0.00015768444088637106135),
    (7.0, 0.0, 5.2428856633634639372e-22, 0.081447508065002967563),
    (7.0, 1e-10, 1.1885945819771858088e-12, 0.081447508065002967563),
    (7.0, 0.001, 0.000011885945552633883906, 0.08144750631089037044),
    (7.0, 0.2, 0.0023750959382436091749, 0.081377406821923615773),
    (7.0, 0.8, 0.0093766204105759154016, 0.08034084425583221266),
    (7.0, 1.5, 0.016988628366453168056, 0.077690984494493207866),
    (7.0, 3.0, 0.02979582194988339655, 0.068306545603570442817),
    (7.0, 4.4, 0.036813378327164393456, 0.057705743244273426473),
    (7.0, 6.0, 0.040128407617193352553, 0.04626716877531752619),
    (7.0, 9.0, 0.039133386451833214861, 0.030204755880897309154),
    (7.0, 25.0, 0.020915910812690114567, 0.0058477942865265761933),
    (7.0, 150.0, 0.0037530080012311388804, 0.0001751326071472145896),
    (10.0, 0.0, 3.720075976020835963e-44, 0.056705394232887594085),
    (10.0, 1e-10, 5.7287175622393080144e-13, 0.056705394232887594085),
    (10.0, 0.001, 5.7287175028417533439e-6, 0.056705393651106210677),
    (10.0, 0.2, 0.0011452685332959430667, 0.056682132728459022001),
    (10.0, 0.8, 0.0045527672918051568165, 0.056335534504985724156),
    (10.0, 1.5, 0.0083972747071766353013, 0.055426526477734884079),
    (10.0, 3.0, 0.015721778699152371856, 0.051919876088306162618),
    (10.0, 4.4, 0.021005112313498654456, 0.047336070704119581663),
    (10.0, 6.0, 0.025069166138644473192, 0.04147375260940599145),
    (10.0, 9.0, 0.028146900696254152026, 0.031101839682730428945),
    (10.0, 25.0, 0.01944878901184827783, 0.0077688139934744377859),
    (10.0, 150.0, 0.003744539755643157448, 0.00024962493908259531414),
    (30.0, 0.0, 1.3644772123656827617e-391, 0.018816784868660727791),
    (30.0, 1e-10, 6.2792502413109355685e-14, 0.018816784868660727791),
    (30.0, 0.001, 6.2792502343067086033e-7, 0.018816784847694872542),
    (30.0, 0.2, 0.00012557940169528120335, 0.018815946271908450084),
    (30.0, 0.8, 0.00050198165929251314938, 0.01880337630425465083),
    (30.0, 1.5, 0.00093952954090550389753, 0.018769729923247166099),
    (30.0, 3.0, 0.0018650520396339925298, 0.018629969686364467563),
    (30.0, 4.4, 0.0027044692480818616349, 0.018419475104908712827),
    (30.0, 6.0, 0.0036221117190724203243, 0.018091181793404797363),
    (30.0, 9.0, 0.0051831083407726546256, 0.017259395106897642465),
    (30.0, 25.0, 0.0092531341768025237785, 0.01109648053143325883),
    (30.0, 150.0, 0.0036165345084344420102, 0.00072327599423428849284),
    (200.0, 0.0, 1.6623553671520518223e-17372, 0.0028209831809101551581),
    (200.0, 1e-10, 1.4105268549489360019e-15, 0.0028209831809101551581),
    (200.0, 0.001, 1.4105268549136697226e-8, 0.0028209831808396261704),
    (200.0, 0.2, 2.8210508886001112268e-6, 0.0028209803597534679625),
    (200.0, 0.8, 0.000011284034279243570038, 0.0028209380430803029804),
    (200.0, 1.5, 0.000021156712655007015811, 0.0028208244996146196453),
    (200.0, 3.0, 0.000042306285901239758938, 0.0028203485628258380838),
    (200.0, 4.4, 0.000062033154944058911527, 0.0028196184003360646508),
    (200.0, 6.0, 0.000084555504686574390576, 0.0028184464206933314369),
    (200.0, 9.0, 0.0001266908455582811359, 0.0028152818793386422051),
    (200.0, 25.0, 0.00034720614710897606283, 0.0027775808015478310666),
    (200.0, 150.0, 0.0013540718990881432619, 0.001805400311889297757),
    (-4.228013644004103, 1.810190087094023, 0.051187415489143139205, -0.11366694086857931181),
    (3.622427352956489, 0.8692354400105131, 0.03955732695485770153, 0.15161101643920075997),
    (0.8611681033605407, 4.388267002951027, 0.12129112479347562667, 0.022733158455093028093),
    (-10.608025805407037, 6.089228798273043, 0.023117993311596705103, -0.040003687940784869987),
    (-11.100104197392362, 5.2037482039486305, 0.019684107028308820132, -0.041707299701830778116),
    (-10.323469834209146, 1.0885561601263807, 0.005779299942846700784, -0.054293055459075819876),
    (-1.8115394605796649, 9.922225496064456, 0.054793893782061127942, -0.0099078190970509058935),
    (-9.028752932408505, 2.6788675752841744, 0.017303261383223045161, -0.057651791624676580453),
    (3.0583973377341422, 11.372507309484067, 0.04614270049162564085, 0.012321045829116171102),
    (1.8504707668199671, 4.760165695809362, 0.1020006425433928543, 0.038237890449311698937),
    (11.43012253423008, 0.5589921674130753, 0.0024362256281952136484, 0.049430457737700387582),
    (8.60324301716831, 3.475311435980115, 0.023102891347302915652, 0.056520308152779114713),
    (-8.5378779994215, 1.4135068569404203, 0.010860622946431104139, -0.064707513735888461947),
    (-4.596436221553575, 9.793516309440378, 0.047151760313196774446, -0.021943709290753254341),
    (-7.662566881825501, 6.9792019639495955, 0.036855080908604238924, -0.040088247665032322186),
    (3.3339232542284165, 4.468770512708774, 0.081592765567948142748, 0.058983422697215437137),
    (1.1458671770293876, 0.7534676996798777, 0.29237470324464838217, 0.27545203902569930315),
    (-10.569571920810416, 2.4715045538319185, 0.011977429575926974762, -0.050782745514781644054),
    (4.329599356362863, 5.1311076680328345, 0.064669854536014876215, 0.053381028124366111731),
    (-4.460467910957004, 7.026742362091665, 0.057282295213604551793, -0.035847226754337346212),
    (-1.1235749671013906, 3.5972039623641883, 0.13972417875451165365, -0.040960970918105469133),
    (7.065107556539786, 8.387933204754855, 0.039452433192280526134, 0.032956232186830998138),
    (-6.141683742668331, 6.8930845231040525, 0.04582746579482127934, -0.040357111221831234116),
    (0.6047160914748346, 10.501649946881146, 0.053310671230165281379, 0.0030426468425989444935),
    (5.5066869465412225, 3.4552531786822382, 0.047157522005095586701, 0.073363713150652976393),
    (11.52419633982197, 1.4167893390595454, 0.0059950135238153696094, 0.048397903829396372623),
    (-1.9650522771545482, 9.085691154782992, 0.059042650295036868315, -0.012625789191268474411),
    (-8.352371168147886, 5.867557205709668, 0.032028871951546741613, -0.045154329668288160171),
    (-11.059025830861497, 8.018590278412741, 0.024349765071416162674, -0.033402470858860173805),
    (6.349700789107516, 6.876311283328608, 0.044493422104959278326, 0.040620642766617468441),
    (9.011467483941317, 3.764970154177161, 0.022555347231095516134, 0.053414869635920641435),
    (4.687088790567824, 7.132438525260222, 0.055314042367476095429, 0.035859528223344995398),
    (1.9174849027798118, 5.474463975616956, 0.091024396515123447603, 0.030988841129392479361),
    (8.159226732300993, 11.336173141295248, 0.032814849302423852099, 0.023498172238702710075),
    (-0.6216399019285319, 7.9698264656960935, 0.069836987532743057864, -0.0053651148678727732745),
    (-10.543933737666727, 8.417904255653086, 0.026193086397744765527, -0.032628264064121978124),
    (3.5310925086640506, 11.91715127359961, 0.043426453059906536076, 0.01278526818751586844),
    (7.726194878633159, 3.4151463851297907, 0.027454559082281825119, 0.061230520471961595342),
    (-2.7410053812789403, 8.023832590610258, 0.06271093547669246828, -0.021132930915289859834),
    (-11.458489726665874, 5.54034343559719, 0.019430509593937203896, -0.039936801583424984499),
];
