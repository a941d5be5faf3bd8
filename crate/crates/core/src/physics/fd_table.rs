// Generated by scripts/gen_fermi_dirac_table.py. Do not edit by hand.

pub(crate) const TABLE_LO: f64 = -2.0;
pub(crate) const TABLE_HI: f64 = 66.0;
pub(crate) const TABLE_WIDTH: f64 = 2.0;
pub(crate) const TABLE_DEGREE: usize = 22;

#[rustfmt::skip]
pub(crate) const HALF: [[f64; 23]; 34] = [
    [7.74780774773800918e-01, 3.12040670230237183e-01, 5.97181735665642949e-02, 5.92844472793226281e-03, 1.18494725762724598e-04, -4.51467056250044220e-05, -4.36754462502161426e-06, 2.85862798199693449e-07, 8.19932067874185877e-08, 1.64880150389817962e-09, -1.16595051043430238e-09, -1.14224387388033243e-10, 1.08608984209412972e-11, 2.79357979928202276e-12, 2.62288861788617439e-14, -4.77145241758581353e-14, -4.22543318480242420e-15, 5.39736651795235692e-16, 1.21201538301776823e-16, -4.17421292375405881e-19, -2.32238830582477466e-18, -1.79117763168826892e-19, 3.00637754266708064e-20],
    [3.37107654628197828e+00, 1.02867469800625067e+00, 1.09392789194931686e-01, 5.85901906181158106e-04, -5.00798469793606793e-04, 2.71379905585970387e-05, 3.89880995763258396e-06, -6.21526693166402219e-07, -1.11076669334464515e-08, 1.01330661232040458e-08, -5.73411155724798053e-10, -1.21937324156370379e-10, 1.88641499225310473e-11, 6.44541360782506756e-13, -3.80218958444786756e-13, 1.82052867744475886e-14, 5.44311336072228459e-15, -7.63972166360210546e-16, -4.00916592362897170e-17, 1.75010124867775391e-17, -6.47141554472515739e-19, -2.81076655937581446e-19, 3.51310132574276681e-20],
    [9.15511219802578324e+00, 1.84629626764557275e+00, 9.00498718406305826e-02, -2.38195031310307762e-03, 3.98306964347091335e-05, 8.73866786940421692e-06, -1.36508819790186830e-06, 1.02410506564759652e-07, -1.49435791609671402e-09, -7.26391995934008100e-10, 1.10818274257261659e-10, -7.93466962886425536e-12, -2.03196825411429609e-14, 8.40446611012616452e-14, -1.15418064825267628e-14, 7.33937273393777678e-16, 2.03155401296548626e-17, -1.09221866329136424e-17, 1.34374486915958439e-18, -7.19070517222459957e-20, -4.72250967457167587e-21, 1.50376990841916862e-21, -1.65448631276860041e-22],
    [1.78231813605661635e+01, 2.46888799857761221e+00, 6.74373924930251611e-02, -1.36990603788601567e-03, 5.56122485307499034e-05, -2.00658326258612312e-06, 3.72178953400064539e-09, 8.86583257767611185e-09, -1.07872321897045094e-09, 8.56068526337722217e-11, -4.87175811095841560e-12, 1.47560624841058146e-13, 8.06716517166039579e-15, -1.84326023140813708e-15, 1.89654865036723666e-16, -1.37651338975377502e-17, 6.71255176569676053e-19, -5.62906872100458252e-21, -3.30791573231660866e-21, 4.70718647502148954e-22, -4.20395534521323983e-23, 2.67504889894060019e-24, -9.46512095834413896e-26],
    [2.86912739826096939e+01, 2.95496734052786314e+00, 5.51483381847114179e-02, -7.56164455657397155e-04, 2.45821187515109400e-05, -1.00598201970335634e-06, 3.98920320697851662e-08, -1.16801661465682177e-09, -2.88519038820206467e-12, 3.96965221826718989e-12, -3.98274131400257570e-13, 2.83388292652328315e-14, -1.65185474957404227e-15, 7.98522339242791058e-17, -2.91850720175165680e-18, 3.94557966189976122e-20, 5.87594294632196797e-21, -7.76752674943284746e-22, 6.38385792142344542e-23, -4.20250112976440591e-24, 2.30637323671570484e-25, -1.00840631626708486e-26, 2.66472240675580480e-28],
    [4.13438334906032168e+01, 3.36530094659923051e+00, 4.79101507707979032e-02, -4.82136069476319100e-04, 1.16317288422414351e-05, -3.87865049372486688e-07, 1.47104464430459570e-08, -5.57038143917778904e-10, 1.87456702622157320e-11, -4.53055504658664415e-13, -1.05865161033765935e-15, 1.07619695863589834e-15, -9.14653649904160244e-17, 5.65777076172197393e-18, -2.97914605037283586e-19, 1.39425248425027634e-20, -5.81912022229420200e-22, 2.09082736872803969e-23, -5.62826521042461439e-25, 2.77578407864672437e-27, 1.07079625223519128e-27, -1.05411089038280596e-28, 7.19215237221435911e-30],
    [5.55387766764366830e+01, 3.72811650199818123e+00, 4.30353509861324535e-02, -3.43172373688264347e-04, 6.43134202941103422e-06, -1.68239226145920114e-07, 5.28811487202074003e-09, -1.81764424842492057e-10, 6.32313390167864125e-12, -2.07819587668100232e-13, 5.94767214642633494e-15, -1.22391330477406624e-16, -1.52256245860184893e-19, 2.02664506210303225e-19, -1.49210804080738633e-20, 8.04424944103671032e-22, -3.74475212348260190e-23, 1.58540651492924896e-24, -6.22342116926802869e-26, 2.26898115059730741e-27, -7.56108242489143724e-29, 2.19220650714350019e-30, -4.68213516024028744e-32],
    [7.11159073229380851e+01, 4.05745825427730633e+00, 3.94420881655868846e-02, -2.61686926676587368e-04, 4.01746552071599138e-06, -8.50532186224325369e-08, 2.17649817530232657e-09, -6.29883663618528027e-11, 1.95415564807736421e-12, -6.18041699263608121e-14, 1.90153402365992216e-15, -5.42752050040736698e-17, 1.34288363237718885e-18, -2.40832633515220422e-20, -5.74752894268056937e-24, 2.85402068090864509e-23, -1.85334281562019457e-24, 8.79836078308255933e-26, -3.62619845667752179e-27, 1.37201110033136657e-28, -4.88484682477900698e-30, 1.65410529809337959e-31, -5.33283831931481596e-33],
    [8.79583179252360594e+01, 4.36141335748065107e+00, 3.66391991516063498e-02, -2.08672327259971642e-04, 2.72529132466219369e-06, -4.85433931913506285e-08, 1.03623497573458765e-09, -2.50840946496457363e-11, 6.64639526729715755e-13, -1.86527144756582091e-14, 5.35804699676404120e-16, -1.52274136283244394e-17, 4.14153421793115735e-19, -1.03814458284992609e-20, 2.25641621241534591e-22, -3.58688939426239058e-24, 1.73238989626553778e-27, 3.14590324705448450e-27, -1.82768804225360337e-28, 7.72780746439823282e-30, -2.84135724740243320e-31, 9.62761002112819922e-33, -3.08915240395370864e-34],
    [1.05975298469899414e+02, 4.64518591751072485e+00, 3.43685343781712019e-02, -1.71685634461590016e-04, 1.95646717640639261e-06, -3.01982239332681524e-08, 5.54022365684305536e-10, -1.14496256588432573e-11, 2.59123419626617392e-13, -6.29102754024299168e-15, 1.60430801802779271e-16, -4.19623819085992635e-18, 1.09757303941863239e-19, -2.79914760199719809e-21, 6.78154266391665362e-23, -1.51100479354506429e-24, 2.92454979477773040e-26, -4.17381751059070218e-28, 3.97423752662398262e-31, 2.79953087706295868e-31, -1.47171212910690086e-32, 5.60174669715660789e-34, -1.85434233842215854e-35],
    [1.25093586672563177e+02, 4.91238375269104655e+00, 3.24782746415965898e-02, -1.44585879468010921e-04, 1.46359153112152142e-06, -1.99842478604084857e-08, 3.22590623587739250e-10, -5.82869339991621022e-12, 1.14698894262170226e-13, -2.41895611816117004e-15, 5.39861431638049997e-17, -1.25757059934500831e-18, 3.00685934219664127e-20, -7.24013010576244631e-22, 1.72107502016870253e-23, -3.95881391998757013e-25, 8.62127237080488853e-27, -1.72619076413839412e-28, 3.00903937013357799e-30, -3.89466214921475926e-32, 4.82464207550737889e-35, 2.05683128485868985e-35, -9.89573388850434300e-37],
    [1.45252310660593906e+02, 5.16564003307122199e+00, 3.08717862520046619e-02, -1.23994166466015145e-04, 1.12995770517894903e-06, -1.38536050975144440e-08, 2.00130415736927141e-10, -3.22224713286725532e-12, 5.62183431390992322e-14, -1.04630599085357942e-15, 2.05701764857592750e-17, -4.23773332965170972e-19, 9.06537468526163829e-21, -1.99018752880194748e-22, 4.42025661877092145e-24, -9.77695966815370585e-26, 2.11900407137542361e-27, -4.42573824225363901e-29, 8.73879229712021369e-31, -1.58728151455370714e-32, 2.51558121401684536e-34, -2.97996714497140189e-36, 1.77357301955120527e-39],
    [1.66399803923535217e+02, 5.40695045077996816e+00, 2.94839582804628172e-02, -1.07897864701057299e-04, 8.94529891213611100e-07, -9.95977194330166224e-09, 1.30383766172309046e-10, -1.89720700393082370e-12, 2.98111796589836508e-14, -4.97652469047744071e-16, 8.74053221439124463e-18, -1.60504248182175949e-19, 3.06563339418882062e-21, -6.05364856031034472e-23, 1.22580295825009716e-24, -2.51833698509500221e-26, 5.18439872117949115e-28, -1.05537917033647601e-29, 2.09573870438909952e-31, -4.00151027804576354e-33, 7.21962916336124750e-35, -1.20237919232253944e-36, 1.46362822001798493e-38],
    [1.88491473652231207e+02, 5.63787221494265545e+00, 2.82689909641861969e-02, -9.50252422775114947e-05, 7.22818363110023228e-07, -7.37466735936560412e-09, 8.83361829750295392e-11, -1.17403357955705981e-12, 1.68122456205879343e-14, -2.55051831930404550e-16, 4.05726983612936639e-18, -6.72480550940468795e-20, 1.15652736914459044e-21, -2.05677356103864964e-23, 3.76741591881989658e-25, -7.06766444381979803e-27, 1.34740866881471616e-28, -2.58526915069038745e-30, 4.93826556953155867e-32, -9.28460017262753070e-34, 1.69797403911394691e-35, -3.01582029664333264e-37, 2.03186035249555556e-39],
    [2.11488308112380253e+02, 5.85964902511726038e+00, 2.71935563483768662e-02, -8.45350866099563788e-05, 5.94144840677542164e-07, -5.59577263611248415e-09, 6.18087960214521608e-11, -7.56574242375784818e-13, 9.96346595477445925e-15, -1.38746263164727497e-16, 2.02126931120589549e-18, -3.05952281645391555e-20, 4.79093541127578155e-22, -7.73903005240776583e-24, 1.28669484834829658e-25, -2.19613938248077326e-27, 3.83334799933945852e-29, -6.80446104076909132e-31, 1.21921526067171453e-32, -2.18581670729154775e-34, 3.88186346372424901e-36, -7.14824543219764093e-38, -2.57139389242375392e-39],
    [2.35355794004465253e+02, 6.07329338389730111e+00, 2.62327228456911594e-02, -7.58501026145264008e-05, 4.95516042459254509e-07, -4.33465843655154532e-09, 4.44352217244092096e-11, -5.04336482338088986e-13, 6.15202092575065396e-15, -7.92542130231055848e-17, 1.06645993734986536e-18, -1.48816909963981194e-20, 2.14329414014876595e-22, -3.17609743880767599e-24, 4.83303210221894899e-26, -7.54063206952290143e-28, 1.20429674763191168e-29, -1.96379470961201577e-31, 3.25670192172705163e-33, -5.46198501061864580e-35, 9.18056496217398644e-37, -1.97561111109878594e-38, -3.19128349149019460e-39],
    [2.60063108536246887e+02, 6.27964290755468912e+00, 2.53674057505670451e-02, -6.85618799166589141e-05, 4.18448252289681036e-07, -3.41779510945764400e-09, 3.26930594218347063e-11, -3.46010056880538050e-13, 3.93271034812708949e-15, -4.71644817272582954e-17, 5.90191302162162487e-19, -7.64869618601956014e-21, 1.02140653945269603e-22, -1.40067691031235992e-24, 1.96800953639325669e-26, -2.82905380959109412e-28, 4.15663376598391257e-30, -6.23553148720619191e-32, 9.53513194052415353e-34, -1.48219620939742878e-35, 2.31012190585426893e-37, -8.13318112849209667e-39, -3.86857027565537979e-39],
    [2.85582502120589083e+02, 6.47940006779492172e+00, 2.45827081491298977e-02, -6.23739801295455524e-05, 3.57221315509067831e-07, -2.73662120895620210e-09, 2.45404325252991552e-11, -2.43355194241303670e-13, 2.59007755814669330e-15, -2.90680771898761889e-17, 3.40127136496684414e-19, -4.11800733406901024e-21, 5.13176628678597245e-23, -6.55812497863122856e-25, 8.57274323346200424e-27, -1.14433628377384363e-28, 1.55819024464965272e-30, -2.16283193736404895e-32, 3.05827894596516731e-34, -4.40044129137289576e-36, 6.20807954028020590e-38, -6.46866276062850596e-39, -4.36218606750458255e-39],
    [3.11888817237099715e+02, 6.67316098352389808e+00, 2.38668051728375789e-02, -5.70664575181123023e-05, 3.07871281570639590e-07, -2.22093353640296845e-09, 1.87463870789809125e-11, -1.74905640615557162e-13, 1.75065841344089888e-15, -1.84674698487214297e-17, 2.02994462471980031e-19, -2.30724334206126247e-21, 2.69709220315648813e-23, -3.23012289985159877e-25, 3.95243279737767459e-27, -4.93162356740968519e-29, 6.26660288202781678e-31, -8.10296827766573083e-33, 1.06561857500465031e-34, -1.42484494204676327e-36, 1.63696771901619335e-38, -5.89469090964106089e-39, -4.85580185935378531e-39],
    [3.38959106965512888e+02, 6.86143675110480267e+00, 2.32101724026494566e-02, -5.24729796543442408e-05, 2.67585356606928824e-07, -1.82402096321186623e-09, 1.45435033223641739e-11, -1.28132700996766571e-13, 1.21059510586171466e-15, -1.20494976185020991e-17, 1.24914968320454830e-19, -1.33836133191676662e-21, 1.47392152600104489e-23, -1.66188662715081284e-25, 1.91291914418875577e-27, -2.24305898879482731e-29, 2.67533509960425338e-31, -3.24242114621193639e-33, 3.99013062603230880e-35, -4.98706922167461400e-37, 3.51270772804316384e-39, -6.96801827098758318e-39, -5.69380076179545512e-39],
    [3.66772328027544802e+02, 7.04466955546722584e+00, 2.26050392649954669e-02, -4.84656384570155048e-05, 2.34325812917405989e-07, -1.51402093495573678e-09, 1.14391868697788308e-11, -9.54736945830469183e-14, 8.54252075533420593e-16, -8.04962113161756982e-18, 7.89739837380825812e-20, -8.00449587646242011e-22, 8.33553550185248431e-24, -8.88258452038158747e-26, 9.65732788888646170e-28, -1.06885259579157683e-29, 1.20227048756409218e-31, -1.37276096845486146e-33, 1.58924540343769321e-35, -1.86804878622373873e-37, -8.72437213500916510e-40, -6.29073148682239799e-39, -5.32645877716349027e-39],
    [3.95309090552977466e+02, 7.22324504686528535e+00, 2.20449935901046133e-02, -4.49446086634416715e-05, 2.06589166981994589e-07, -1.26871818582304328e-09, 9.10904349058571864e-12, -7.22269891011610908e-14, 6.13801672997458575e-16, -5.49192656586676500e-18, 5.11461409916296189e-20, -4.91930528702745269e-22, 4.85950404028974592e-24, -4.91039522644240399e-26, 5.06010503976879128e-28, -5.30544391997751252e-30, 5.64991823524811445e-32, -6.10322188556138173e-34, 6.67469569625895925e-36, -7.38013005999656874e-38, -2.38772290010777150e-39, -7.63382561813301946e-39, -6.52032022721737602e-39],
    [4.24551451728584084e+02, 7.39750199208458703e+00, 2.15246901812874494e-02, -4.18309485870018531e-05, 1.83247906641468140e-07, -1.07231944772381847e-09, 7.33453721720468381e-12, -5.53924079237909562e-14, 4.48265327812492100e-16, -3.81846185558077756e-18, 3.38475461058016821e-20, -3.09781023044980158e-22, 2.91109397517280351e-24, -2.79742516281170722e-26, 2.74049184569430870e-28, -2.73053039480941552e-30, 2.76202030318065105e-32, -2.83261043331243353e-34, 2.93520021045363611e-36, -2.99039334364458883e-38, -3.07648912129270559e-39, -8.44886564653519146e-39, -6.97949770800733208e-39],
    [4.54482743881215072e+02, 7.56773990114094541e+00, 2.10396324734910267e-02, -3.90614886691080244e-05, 1.63444046842991487e-07, -9.13399768850262974e-10, 5.96542694631573332e-12, -4.30104436986731014e-14, 3.32225645594358741e-16, -2.70069957641279478e-18, 2.28410219984777008e-20, -1.99410782097168905e-22, 1.78711926195690525e-24, -1.63737729258911220e-26, 1.52894100745071203e-28, -1.45159956254685816e-30, 1.39866154924971570e-32, -1.36589080090503022e-34, 1.34318596680677946e-36, -1.29028872101977652e-38, -3.81117309055663528e-39, -8.09300309892297552e-39, -7.66826392919226617e-39],
    [4.85087429925561139e+02, 7.73422512647606464e+00, 2.05860065229241836e-02, -3.65851379038460061e-05, 1.46516055327178812e-07, -7.83563633790692438e-10, 4.89652012275473202e-12, -3.37742592908055461e-14, 2.49540856128358340e-16, -1.94003252552569540e-18, 1.56890438740489877e-20, -1.30947566965900916e-22, 1.12172046480336838e-24, -9.82133261522525439e-27, 8.76200767214531877e-29, -7.94588730793065619e-31, 7.31089032032626663e-33, -6.81654595156829445e-35, 6.36144481886405122e-37, -5.30349990312399247e-39, -3.85709083863563089e-39, -8.68993382394991839e-39, -8.05856478786372881e-39],
    [5.16350980807639758e+02, 7.89719579334059762e+00, 2.01605530991143637e-02, -3.43601722206366873e-05, 1.31947751952929914e-07, -6.76553427726679461e-10, 4.05293832271854109e-12, -2.67956818087858007e-14, 1.89739194779383141e-16, -1.41350810711317554e-18, 1.09520223730982748e-20, -8.75659253440721852e-23, 7.18438474191315612e-25, -6.02372706485111238e-27, 5.14523899498297909e-29, -4.46644309224980016e-31, 3.93285971474078153e-33, -3.50952792398869340e-35, 3.09187156689916912e-37, -1.99742204143630885e-39, -5.05095228868951664e-39, -9.86083639996430634e-39, -8.08152366190322662e-39],
    [5.48259770811388989e+02, 8.05686582441239274e+00, 1.97604679424518634e-02, -3.23522150313555463e-05, 1.19331972749210598e-07, -5.87644332241973069e-10, 3.38057443657151656e-12, -2.14606299964429104e-14, 1.45894640503138806e-16, -1.04335187305306641e-18, 7.75926130920886498e-21, -5.95381712935711515e-23, 4.68729087532806995e-25, -3.77054111022829541e-27, 3.08944097677591299e-29, -2.57215414637980186e-31, 2.17180901610369531e-33, -1.85907760619280497e-35, 1.53135689843450345e-37, -1.04462876879715003e-39, -5.41829427332148148e-39, -1.05610820581689893e-38, -9.50497385235209040e-39],
    [5.80800987508498565e+02, 8.21342825437068313e+00, 1.93833231294316295e-02, -3.05327135297383851e-05, 1.08344337875094671e-07, -5.13226446812633838e-10, 2.83979019892816706e-12, -1.73378251567296655e-14, 1.13344830365392065e-16, -7.79391574853474287e-19, 5.57260592738755713e-21, -4.11050273870745369e-23, 3.11049061010453878e-25, -2.40470306986804760e-27, 1.89333935818882093e-29, -1.51451124980636915e-31, 1.22843512663446933e-33, -1.01109388943135757e-35, 7.49148059908813308e-38, -1.27421750919212806e-39, -4.91319904445252982e-39, -1.13187249014724168e-38, -8.58661889077217828e-39],
    [6.13962553814885382e+02, 8.36705798198049777e+00, 1.90270044553935008e-02, -2.88777752687252054e-05, 9.87240499043717807e-08, -4.50511606971897089e-10, 2.40117895641126475e-12, -1.41199913502962984e-14, 8.89000976470108065e-17, -5.88674022703376866e-19, 4.05277634192248525e-21, -2.87818841392295534e-23, 2.09669887961724130e-25, -1.56027884249123072e-27, 1.18236336837589344e-29, -9.10168711014077720e-32, 7.10336909864507694e-34, -5.63671352149624383e-36, 3.53796248948661143e-38, 1.40049131640936598e-39, -4.95911679253152542e-39, -1.13646426495514124e-38, -9.78048034082606403e-39],
    [6.47733060135221763e+02, 8.51791407227275066e+00, 1.86896611119861701e-02, -2.73672700691026717e-05, 9.02596587295912657e-08, -3.97324687636804531e-10, 2.04267007953552527e-12, -1.15852879349066586e-14, 7.03456177250572702e-17, -4.49194866199514334e-19, 2.98194189165084540e-21, -2.04179699665100398e-23, 1.43395271732914895e-25, -1.02863966844962738e-27, 7.51327202946670267e-30, -5.57403333762094890e-32, 4.19200203615436272e-34, -3.21753696395436034e-36, 1.49921447477920653e-38, -8.03560591382423101e-41, -6.47440247913838041e-39, -1.11924510942551789e-38, -1.02166989475765223e-38],
    [6.82101704974202676e+02, 8.66614169567485249e+00, 1.83696649015977938e-02, -2.59841297368111215e-05, 8.27783844387618012e-08, -3.51953053078495080e-10, 1.74752032386037877e-12, -9.57158716214343005e-15, 5.61222244196976420e-17, -3.46035028199580294e-19, 2.21787820228193674e-21, -1.46611823638325215e-23, 9.93968462628150554e-26, -6.88247054782580373e-28, 4.85192261554350672e-30, -3.47389223647577736e-32, 2.52098171516278623e-34, -1.87872466265210521e-36, 3.81117309055663528e-39, 1.60712118276484620e-39, -5.41829427332148148e-39, -1.35916534313826993e-38, -9.68864484466807282e-39],
    [7.17058242701168297e+02, 8.81187377177912801e+00, 1.80655769216760305e-02, -2.47137969198421438e-05, 7.61380219955258565e-08, -3.13036608749386853e-10, 1.50290105384273255e-12, -7.95905281207850345e-15, 4.51182760880761821e-17, -2.68935481709164177e-19, 1.66627078684614419e-21, -1.06469507690575024e-23, 6.97661399458903441e-26, -4.66872818078580626e-28, 3.18064494963484745e-30, -2.20053377258592298e-32, 1.54285653926340711e-34, -1.12376800761129896e-36, -3.12240686937170119e-39, 1.33161469429087257e-39, -4.95911679253152542e-39, -1.40508309121726554e-38, -1.10661772870379410e-38],
    [7.52592937395734907e+02, 8.95523237099465952e+00, 1.77761201526355286e-02, -2.35437875875317230e-05, 7.02207417550494216e-08, -2.79486585130081049e-10, 1.29889176372951870e-12, -6.65817187618301243e-15, 3.65317907096085216e-17, -2.10748572518698639e-19, 1.26366731187814057e-21, -7.81366613902436047e-24, 4.95436127232902591e-26, -3.20793015429957104e-28, 2.11443192015748861e-30, -1.41522701053413685e-32, 9.59765423507473513e-35, -6.89409069658040025e-37, -7.43867518879728814e-39, 5.51012976947947269e-40, -5.69380076179545512e-39, -1.32472703207902323e-38, -1.13416837755119146e-38],
    [7.88696521892461988e+02, 9.09632991633256083e+00, 1.75001567505057992e-02, -2.24633409138775399e-05, 6.49282975183633878e-08, -2.50424907065255679e-10, 1.12775447542292969e-12, -5.60142312467440046e-15, 2.97777883954262617e-17, -1.66433233442347227e-19, 9.66801600309763885e-22, -5.79112971706358903e-24, 3.55691805466410571e-26, -2.23080669020291464e-28, 1.42414356777622855e-30, -9.23166390823409764e-33, 6.06187743039668389e-35, -4.32568145778178104e-37, -9.32130286003610797e-39, 7.16316870032331450e-39, -6.52032022721737602e-39, -1.35457356833037037e-38, -1.18467790043808663e-38],
];

#[rustfmt::skip]
pub(crate) const MINUS_HALF: [[f64; 23]; 34] = [
    [6.59204571087703250e-01, 2.39769530370422118e-01, 3.51232306272288436e-02, 8.96836104164956205e-04, -4.47437740364733895e-04, -5.11217019368406233e-05, 4.02931588531032114e-06, 1.28883356341874211e-06, 2.72367105146128930e-08, -2.30577451799551293e-08, -2.44171655555433858e-09, 2.61265028730919193e-10, 7.12199669823927120e-11, 6.03466628328047622e-13, -1.41310779893987633e-12, -1.30942184680081183e-13, 1.83279263358677102e-14, 4.27167723359637952e-15, -2.31198251703030803e-17, -9.15781452675861943e-17, -7.25781606003765655e-18, 1.31738696540478600e-18, 2.65129993053071968e-19],
    [2.06112766571131800e+00, 4.33611365992241593e-01, 3.77826969881658783e-03, -3.95979078748513388e-03, 2.62858261729639246e-04, 4.65969708637206203e-05, -8.52164385633111674e-06, -1.88748627870388996e-07, 1.79729847998515482e-07, -1.10259569352457706e-08, -2.66534221915734303e-09, 4.42266179250189939e-10, 1.72789122828051701e-11, -1.04734188905552305e-11, 5.20836902459994709e-13, 1.72711945898798353e-13, -2.53217007734328682e-14, -1.46768164431474090e-15, 6.53352882814291385e-16, -2.43819118083111618e-17, -1.16855916832550483e-17, 1.50375037058947040e-18, 1.19627866123373230e-19],
    [3.67838964059090090e+00, 3.60501730181453872e-01, -1.42028947002443701e-02, 3.02242818931533572e-04, 8.88071783740954340e-05, -1.64027525461395092e-05, 1.42049968005327149e-06, -2.16941713170887265e-08, -1.32474118533636729e-08, 2.21555534045869861e-09, -1.72355926551527353e-10, -8.10144686534393054e-13, 2.20680528348624953e-12, -3.22472305546962069e-13, 2.16440948534466462e-14, 6.98275963787328815e-16, -3.74023348366682576e-16, 4.81786796383731677e-17, -2.66900284761871594e-18, -1.96135651371866099e-19, 6.34651178266319960e-20, -7.23526438899904011e-21, 3.06781673026906265e-22],
    [4.92953662076106003e+00, 2.70194495265013324e-01, -8.23937639416452532e-03, 4.44925292912685141e-04, -1.99401668484305038e-05, 2.73046666859210948e-08, 1.25665777430726544e-07, -1.73568077220866466e-08, 1.54412134326098091e-09, -9.72362185594324389e-11, 3.19799585308086926e-12, 1.98943659735870720e-13, -4.83378934224102316e-14, 5.33169561602123274e-15, -4.13127405798666687e-16, 2.13593949929701907e-17, -1.73388872534154270e-19, -1.20770657259440951e-19, 1.79994639800015369e-20, -1.68569089604304449e-21, 1.12155374919877433e-22, -4.10875795774855627e-24, -1.96678835627789027e-25],
    [5.90538761822143154e+00, 2.20790488339074359e-01, -4.54706283429474976e-03, 1.97135600228670046e-04, -1.00761003503672707e-05, 4.78650216582540878e-07, -1.62801533337076746e-08, -5.41682548810920111e-11, 7.20792714878307589e-11, -8.00520866985897638e-12, 6.25531559021342981e-13, -3.97260418538258012e-14, 2.07731518622067555e-15, -8.15278640487853011e-17, 1.15710418941873079e-18, 1.90337600261087613e-19, -2.65697091511976992e-20, 2.30742597878465592e-21, -1.60118203126017938e-22, 9.23712707221539916e-24, -4.23160194970491250e-25, 1.16341253525705070e-26, 3.70457861659297655e-28],
    [6.72770519032444447e+00, 1.91733833739194198e-01, -2.89670287401682953e-03, 9.32306560025956559e-05, -3.88645715891494529e-06, 1.76825264664185720e-07, -7.80666519007864437e-09, 2.99907347634234843e-10, -8.13117522973943731e-12, -2.33765612168675323e-14, 2.38238541165221490e-14, -2.20352901011434530e-15, 1.47521026532385251e-16, -8.36025034436072359e-18, 4.18986727613915796e-19, -1.86414033167829260e-20, 7.10982338832904886e-22, -2.02186054414809658e-23, 1.01033465371327665e-25, 4.31493160476201449e-26, -4.44632961724019903e-27, 3.17465958202447205e-28, -1.90638776650604492e-29],
    [7.45417228481352634e+00, 1.72192918239432669e-01, -2.06071918283643298e-03, 5.15142949028443202e-05, -1.68494070684689003e-06, 6.35586675560455282e-08, -2.54844538768872147e-09, 1.01289091796646073e-10, -3.74343989383240725e-12, 1.18949369787810490e-13, -2.68731580660301981e-15, -4.07314071620813091e-18, 5.29346389992585845e-18, -4.18990815563692947e-19, 2.41867384579746841e-20, -1.20056413762473074e-21, 5.39901348645520472e-23, -2.24345811029820602e-24, 8.63133569575191746e-26, -3.02648936174570155e-27, 9.20732348325268646e-29, -2.05639180691457856e-30, 5.61487871751704391e-34],
    [8.11334553557941618e+00, 1.57800518535795908e-01, -1.57097297519654734e-03, 3.21658734483848351e-05, -8.51415137023129795e-07, 2.61492826569066203e-08, -8.82950798804429521e-10, 3.13045532786978368e-11, -1.11366973849022858e-12, 3.80629094600069743e-14, -1.19467981573389283e-15, 3.22289868085332665e-17, -6.25305644272037357e-19, -2.20368519268079083e-22, 8.59202867535736622e-22, -5.94377088730231872e-23, 2.99666326314317420e-24, -1.30738773177028412e-25, 5.22059689501684779e-27, -1.95628736675557028e-28, 6.95471377256877925e-30, -2.34863701322819620e-31, 7.47147012804659125e-33],
    [8.72157419521229649e+00, 1.46578611382487373e-01, -1.25251974900515250e-03, 2.18147760619648317e-05, -4.85785445322735016e-07, 1.24454646672827213e-08, -3.51513409228727026e-10, 1.06449584676691169e-11, -3.36084133686761831e-13, 1.07260399936653572e-14, -3.35273124914105671e-16, 9.94600013727496093e-18, -2.70025090968036793e-19, 6.31801424018366190e-21, -1.07499427055990139e-22, 4.88454206937109245e-26, 1.07254771881663709e-25, -6.59105598687391133e-27, 2.94061481708528697e-28, -1.13790348065536433e-29, 4.04798075770974726e-31, -1.36058423430617964e-32, 4.38392686206923886e-34],
    [9.28934141907203248e+00, 1.37489795902513645e-01, -1.03041594941696282e-03, 1.56583898288253191e-05, -3.02142647422791093e-07, 6.65241757417780328e-09, -1.60408090109593354e-10, 4.14918596613699653e-12, -1.13330885787754739e-13, 3.21125211111800551e-15, -9.23900633808944445e-17, 2.63607506242026623e-18, -7.28231819760512647e-20, 1.89976781554874571e-21, -4.53443241241170687e-23, 9.35869652082698257e-25, -1.41803177650668057e-26, 1.37177537064288125e-29, 1.06617708086903822e-29, -5.89501442819865938e-31, 2.35534946584031174e-32, -8.16626879589653024e-34, 2.60730483588643098e-35],
    [9.82389979018116044e+00, 1.29924811171559074e-01, -8.67715200931946018e-04, 1.17126051727179773e-05, -1.99924123880579191e-07, 3.87292374580605766e-09, -8.16452764943432551e-11, 1.83626275318641894e-12, -4.35688955163072420e-14, 1.08044499169522180e-15, -2.76853894061774510e-17, 7.22128419121884358e-19, -1.88362205872700292e-20, 4.82176994690406553e-22, -1.18823122876668169e-23, 2.75989043169677355e-25, -5.87052770401446430e-27, 1.08327303784381054e-28, -1.47910611241373962e-30, 1.88639141362737151e-33, 8.65527074551382501e-34, -4.35005041922957191e-35, 1.57264986832416772e-36],
    [1.03305359625624664e+01, 1.23496187072124980e-01, -7.44103579977368730e-04, 9.04206410632554804e-06, -1.38581181277840607e-07, 2.40246489395457356e-09, -4.51303026961676856e-11, 8.99905111448130350e-13, -1.88428360261118315e-14, 4.11621222542656665e-16, -9.32819074740190093e-18, 2.17692827471204914e-19, -5.17742216813980371e-21, 1.23835024925584990e-22, -2.93459325474038103e-24, 6.78395999990755675e-26, -1.50535429415928203e-27, 3.14697149014050378e-29, -6.03291992154166368e-31, 1.00625545859689785e-32, -1.24996417078639455e-34, 1.80940321234909653e-37, 5.83241496380892310e-38],
    [1.08132534147474413e+01, 1.17942990926063335e-01, -6.47486812495636161e-04, 7.15780421205671471e-06, -9.96242892923487717e-08, 1.56508234782650608e-09, -2.65698593321425564e-11, 4.77153758797566834e-13, -8.96127711102388709e-15, 1.74884253828365903e-16, -3.53266816449362870e-18, 7.36095405409861528e-20, -1.57470448575724378e-21, 3.43390804544589008e-23, -7.55860076554126673e-25, 1.65976234560550963e-26, -3.58981025504425135e-28, 7.54754809114209298e-30, -1.52107802520585890e-31, 2.88867166664208814e-33, -5.03800305325235163e-35, 7.66250627406204836e-37, -8.89943354956033585e-39],
    [1.12751742046685308e+01, 1.13081747463952942e-01, -5.70225216779725189e-04, 5.78360720815298927e-06, -7.37631146561828056e-08, 1.06030327280344769e-09, -1.64410625267657677e-11, 2.69077103093339485e-13, -4.59241296693259510e-15, 8.11731639325248667e-17, -1.47999218531276920e-18, 2.77672099375290604e-20, -5.34973243737808603e-22, 1.05530780588914664e-23, -2.12117867759655475e-25, 4.31348619560196692e-27, -8.79344449202793832e-29, 1.77845518849034789e-30, -3.52940390854678813e-32, 6.79478734593963718e-34, -1.25318560214935786e-35, 2.17719719981371399e-37, -3.66552773336857109e-39],
    [1.17187907837465399e+01, 1.08778979294097883e-01, -5.07266487980636833e-04, 4.75390059042848702e-06, -5.59683208986241406e-08, 7.41865008149590502e-10, -1.05945374992942530e-11, 1.59455892164464414e-13, -2.49810603326540354e-15, 4.04368880730776590e-17, -6.73296300308549026e-19, 1.15018489597476844e-20, -2.01280688687552783e-22, 3.60397268580842853e-24, -6.59073249508422222e-26, 1.22711043302666494e-27, -2.31434762540304029e-29, 4.39073006424429427e-31, -8.30899056540088349e-33, 1.55398954481052034e-34, -2.84488860956001656e-36, 5.02483656946958789e-38, -1.04678116323835295e-39],
    [1.21461316238252675e+01, 1.04934856044425415e-01, -4.55143969333661545e-04, 3.96466166078839854e-06, -4.33536465031715036e-08, 5.33321114362066606e-10, -7.06213765604746404e-12, 9.84536691560170239e-14, -1.42690331421898330e-15, 2.13343440065681444e-17, -3.27479803082742819e-19, 5.14525957083789760e-21, -8.26011619841862884e-23, 1.35363448085919439e-24, -2.26285751866990712e-26, 3.85492237700966216e-28, -6.67897794411883311e-30, 1.17278215069347812e-31, -2.07623620555293253e-33, 3.68113962422246685e-35, -6.48724509930422450e-37, 1.10399898213366388e-38, -3.85278604975322505e-40],
    [1.25588744096470819e+01, 1.01472970980666141e-01, -4.11405462296038035e-04, 3.34797839796568220e-06, -3.41827960845017441e-08, 3.92379648233864532e-10, -4.84498992530636489e-12, 6.29351718480035488e-14, -8.49128978832830731e-16, 1.18062779701136534e-17, -1.68307742181380516e-19, 2.45192687040327772e-21, -3.64260889501941326e-23, 5.51175716807064562e-25, -8.48928207276156505e-27, 1.33046616744857101e-28, -2.12064377209332112e-30, 3.43359467278453298e-32, -5.63420662769057479e-34, 9.33425812217770834e-36, -1.55440186825164937e-37, 2.35507825108286056e-39, -2.36045923718586786e-40],
    [1.29584258643394463e+01, 9.83336906615702999e-02, -3.74271250396858977e-04, 2.85806505071089089e-06, -2.73696195855974032e-08, 2.94526638348294789e-10, -3.40749603538088475e-12, 4.14480447049410252e-14, -5.23316002633679601e-16, 6.80377459392920045e-18, -9.06132159082070435e-20, 1.23186399551227113e-21, -1.70545586888226201e-23, 2.40086683637815544e-25, -3.43374438136240759e-27, 4.98731006616429293e-29, -7.35529780979371507e-31, 1.10125109950218851e-32, -1.67283144611947855e-34, 2.57429532013049546e-36, -4.01550706950816573e-38, 3.88507196637126883e-40, -2.21696627443900659e-40],
    [1.33459795460909039e+01, 9.54696838865875391e-02, -3.42420956893049245e-04, 2.46319523722465978e-06, -2.22117843754635282e-08, 2.24984659542922673e-10, -2.44901143384283045e-12, 2.80145951517166368e-14, -3.32465225030310381e-16, 4.06053666225653325e-18, -5.07677533246500128e-20, 6.47412816932850676e-22, -8.39979930223939003e-24, 1.10688175293547270e-25, -1.47976262516199293e-27, 2.00569667182992272e-29, -2.75554664904601199e-31, 3.83715111500570936e-33, -5.41591300760469732e-35, 7.74648553050964891e-37, -1.13273344792372285e-38, -7.53338054421021657e-41, -1.98737753404402856e-40],
    [1.37225586460896753e+01, 9.28428304679920907e-02, -3.14856119929772299e-04, 2.14085739426731930e-06, -1.82420037068530210e-08, 1.74541411888717027e-10, -1.79407473436013585e-12, 1.93720203469485798e-14, -2.16920405403918214e-16, 2.49865316114563519e-18, -2.94482708804274204e-20, 3.53794736538797955e-22, -4.32157825854995116e-24, 5.35702985471115861e-26, -6.73027957761871550e-28, 8.56250955382699738e-30, -1.10260827301951089e-31, 1.43687550325050625e-33, -1.89504153443197630e-35, 2.52998899802314710e-37, -3.52992688357278719e-39, -1.98379020997535703e-40, -2.18109303375229127e-40],
    [1.40890483019621637e+01, 9.04220318037691206e-02, -2.90808972288219213e-04, 1.87474378725129810e-06, -1.51415461261923235e-08, 1.37283912050234265e-10, -1.33677663495522667e-12, 1.36696128882893886e-14, -1.44910792569837143e-16, 1.57967975465806189e-18, -1.76122007208950817e-20, 2.00079896410387201e-22, -2.30979267775883942e-24, 2.70443659275655315e-26, -3.20702459560182266e-28, 3.84783838174331164e-30, -4.66804932852464157e-32, 5.72399813116607020e-34, -7.09370088719830402e-36, 8.88824109846608067e-38, -1.24838877589769303e-39, -2.40350712600992624e-40, -2.21696627443900659e-40],
    [1.44462204133903960e+01, 8.81816271830726528e-02, -2.69680340173784980e-04, 1.65282265419969341e-06, -1.26881931349433512e-08, 1.09318343736836046e-10, -1.01127671291818951e-12, 9.82184980742143702e-15, -9.88655019340951615e-17, 1.02303946209966164e-18, -1.08237484934033427e-20, 1.16642267069280416e-22, -1.27686194294627024e-24, 1.41701023264570171e-26, -1.59184071172811453e-28, 1.80821479974404393e-30, -2.07532275116301635e-32, 2.40536498679579495e-34, -2.81478306851091134e-36, 3.32781704554383310e-38, -5.16574665888700565e-40, -2.38557050566656858e-40, -2.08782260796683145e-40],
    [1.47947529877536805e+01, 8.61002267964245394e-02, -2.50996415492050779e-04, 1.46607127475127377e-06, -1.07239700396882475e-08, 8.80216195287220030e-11, -7.75562450062383756e-13, 7.17292226579591904e-15, -6.87391293103734506e-17, 6.77020796045698967e-19, -6.81590991945743824e-21, 6.98739296652684570e-23, -7.27412467874823528e-25, 7.67426112114582708e-27, -8.19255436935685673e-29, 8.83952850122464063e-31, -9.63147497538119338e-33, 1.05910416310017403e-34, -1.17511911672470447e-36, 1.31841334171816133e-38, -2.81246206983848085e-40, -2.60439727385553202e-40, -2.31023670022446642e-40],
    [1.51352454242152756e+01, 8.41598375179292840e-02, -2.34378066614531475e-04, 1.30762396518335488e-06, -9.13459988333139108e-09, 7.15904394229816463e-11, -6.02194828761261776e-13, 5.31606719284485344e-15, -4.86169798383980934e-17, 4.56863335113323439e-19, -4.38746296778642002e-21, 4.28951437694078106e-23, -4.25761648704449679e-25, 4.28148244203333794e-27, -4.35526312046273336e-29, 4.47620810531198018e-31, -4.64393937287905953e-33, 4.86003651605064862e-35, -5.13036846892176700e-37, 5.49111695191551358e-39, -1.89410710825856874e-40, -2.63309586640490427e-40, -2.45372966297132768e-40],
    [1.54682307342885963e+01, 8.23451982789015768e-02, -2.19518663532288475e-04, 1.17218720485187113e-06, -7.83610921246046335e-09, 5.87622344405626332e-11, -4.72874553537838944e-13, 3.99296750585495910e-15, -3.49234665613142563e-17, 3.13807801225731154e-19, -2.88110185173779569e-21, 2.69237447514016576e-23, -2.55378487975532372e-25, 2.45359612078391467e-27, -2.38399795767523461e-29, 2.33972167155373502e-31, -2.31722480177052005e-33, 2.31413716181109229e-35, -2.33151670659982594e-37, 2.39776740750005179e-39, -1.62147047903953233e-40, -2.69049305150364878e-40, -2.56852403316881670e-40],
    [1.57941854188819626e+01, 8.06432680271113728e-02, -2.06167799233262383e-04, 1.05563065391935815e-06, -6.76590944225719003e-09, 4.86382959187966597e-11, -3.75164990395536233e-13, 3.03604617416155642e-15, -2.54450725350250350e-17, 2.19057691426138870e-19, -1.92660698787379670e-21, 1.72439641733741270e-23, -1.56630304208602783e-25, 1.44079278249551103e-27, -1.34005223856355445e-29, 1.25863476051416474e-31, -1.19265723415164005e-33, 1.13924053092512683e-35, -1.09890498195615031e-37, 1.11565778535684636e-39, -1.42058033119392655e-40, -2.94878038444799906e-40, -2.48242825552069994e-40],
    [1.61135375296578545e+01, 7.90428264661586777e-02, -1.94119166931923284e-04, 9.54696351221393174e-07, -5.87674379002132455e-09, 4.05692277083027271e-11, -3.00467601593853508e-13, 2.33446944452676860e-15, -1.87816436527654394e-17, 1.55196476547391079e-19, -1.30993781024452582e-21, 1.12503632137656313e-23, -9.80417859603815619e-26, 8.65112978216801158e-28, -7.71709435840714955e-30, 6.95042752984832083e-32, -6.31421060894763081e-34, 5.78083426595512262e-36, -5.35565959508247654e-38, 5.62851146374563324e-40, -1.43492962746861268e-40, -2.98106630106604284e-40, -2.56852403316881670e-40],
    [1.64266733073276825e+01, 7.75341593065088236e-02, -1.83201413685642027e-04, 8.66788782296773210e-07, -5.13250721170848476e-09, 3.40792960158834326e-11, -2.42743582146935840e-13, 1.81362874543052841e-15, -1.40299527204918763e-17, 1.11459584255389724e-19, -9.04373129339334051e-22, 7.46570763858534232e-24, -6.25268236939947601e-26, 5.30174334384541818e-28, -4.54387730111640700e-30, 3.93136106993306443e-32, -3.43032956607389276e-34, 3.01551465663268183e-36, -2.69465434742330775e-38, 2.86268460679988230e-40, -1.34883384982049592e-40, -2.91649446782995527e-40, -2.51830149620741525e-40],
    [1.67339426928040709e+01, 7.61088076427887950e-02, -1.73271156926111444e-04, 7.89821214804933846e-07, -4.50531376019464079e-09, 2.88155699595580887e-11, -1.97690475669798859e-13, 1.42248262291141987e-15, -1.05967656506818280e-17, 8.10605592468452640e-20, -6.33242021043652794e-22, 5.03240839555815771e-24, -4.05699806024056638e-26, 3.31084476736424389e-28, -2.73069751204172423e-30, 2.27330950013905133e-32, -1.90835188425919005e-34, 1.61338823791281537e-36, -1.39876940085640364e-38, 1.82953527502248117e-40, -1.42058033119392655e-40, -2.81963671797582392e-40, -2.75506488473973635e-40],
    [1.70356639369516785e+01, 7.47593665497276738e-02, -1.64207593823694517e-04, 7.22101783003274044e-07, -3.97340907848509095e-09, 2.45131665439521839e-11, -1.62202117045506896e-13, 1.12558952588044618e-15, -8.08595681367682520e-18, 5.96422795299235299e-20, -4.49222085566919958e-22, 3.44169690662337081e-24, -2.67463036989212023e-26, 2.10385033343844263e-28, -1.67231910704012111e-30, 1.34160125639080966e-32, -1.08515141106560405e-34, 8.83597019946146778e-37, -7.48531040169001805e-39, 1.16229299824957627e-40, -1.46362822001798493e-40, -3.03846348616478735e-40, -2.64744516267959040e-40],
    [1.73321274830516181e+01, 7.34793218544378263e-02, -1.55908298085405953e-04, 6.62248046651980632e-07, -3.51966453923417404e-09, 2.09711418862752122e-11, -1.34008449223079511e-13, 8.97999950664867952e-16, -6.22895307149991535e-18, 4.43599497058109458e-20, -3.22563907469971343e-22, 2.38566017220983077e-24, -1.78954656557013859e-26, 1.35861902195152130e-28, -1.04223125068140909e-30, 8.06838896683396499e-33, -6.29691603351678771e-35, 4.94345094832363685e-37, -4.16273084928644539e-39, 9.32704257854598242e-41, -1.69321696041296296e-40, -3.16043250449961943e-40, -2.67614375522896265e-40],
    [1.76235992576462621e+01, 7.22629168089156254e-02, -1.48285911996571938e-04, 6.09122211498778757e-07, -3.13047751907431070e-09, 1.80355345718572902e-11, -1.11431580442014875e-13, 7.21925744499432312e-16, -4.84107291582122797e-18, 3.33270902133445827e-20, -2.34245056272733398e-22, 1.67447642169877900e-24, -1.21393534681675196e-26, 8.90629973457290166e-29, -6.60198019916665372e-31, 4.93820601076846910e-33, -3.72344665887986319e-35, 2.82093532928868301e-37, -2.43220571855929849e-39, 6.38543684223532643e-41, -1.50667610884204331e-40, -3.19630574518633475e-40, -2.83398601425051004e-40],
    [1.79103234764688359e+01, 7.11050423920634445e-02, -1.41265520484259842e-04, 5.61781521326094083e-07, -2.79495906950072312e-09, 1.55872856986801153e-11, -9.32181999127765096e-14, 5.84533925889079903e-16, -3.79364621433267697e-18, 2.52745353434753351e-20, -1.71908996101528650e-22, 1.18910591252561741e-24, -8.34104299251142189e-27, 5.92071665662077355e-29, -4.24591193707010494e-31, 3.07221791657949825e-33, -2.24070001047733745e-35, 1.63887258809665793e-37, -1.47582512185146814e-39, 7.82036646970393911e-41, -1.75061414551170747e-40, -3.25370293028507925e-40, -2.89138319934925455e-40],
    [1.81925250501153108e+01, 7.00011464419368762e-02, -1.34782549810758809e-04, 5.19439913677076104e-07, -2.50432749357222783e-09, 1.35335301690263687e-11, -7.84229196710542290e-14, 4.76463951212526577e-16, -2.99592561261639987e-18, 1.93368857064063562e-20, -1.27410654149758145e-22, 8.53700211080771452e-25, -5.80037435894495399e-27, 3.98779612951228084e-29, -2.76964318342104772e-31, 1.94074768850557020e-33, -1.37069586365275672e-35, 9.67910256264540655e-38, -9.41313835619409918e-40, 1.29861131285909448e-40, -1.85105921943451036e-40, -3.15325785636227637e-40, -3.17836912484297709e-40],
];
