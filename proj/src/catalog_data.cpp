#include "scd/catalog.hpp"

namespace scd::detail {

const std::string& catalog_json() {
  static const std::string s = []{
    std::string r;
    r += R"scd({"families":[{"id":"A:v=83","g":1,"t":83,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,1,3,18,38],[0,4,25,33],[0,7,30,39],[0,13,24,40],[0,6,34],[0,5,19,31,41]]},{"id":"A:v=95","g":1,"t":95,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,2,9,21,46],[0,1,31,36],[0,6,17,45],[0,8,32,42],[0,18,40],[0,4,20,33,47],[0,3,26,41]]},{"id":"A:v=107","g":1,"t":107,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,1,11,34,51],[0,4,19,49],[0,7,28,53],[0,16,29,47],[0,5,37],[0,2,14,38,41],[0,6,26,48],[0,8,43,52]]},{"id":"A:v=119","g":1,"t":119,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,5,14,31,58],[0,1,21,56],[0,3,42,46],[0,8,24,57],[0,15,51],[0,7,18,37,59],[0,2,34,47],[0,6,29,54],[0,10,38,50]]},{"id":"A:v=131","g":1,"t":131,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,4,16,44,64],[0,5,42,63],[0,10,33,57],[0,22,30,61],[0,1,3,53],[0,6,19,51,65],[0,7,41,56],[0,11,29,54],[0,26,35,62],[0,17,55]]},{"id":"A:v=143","g":1,"t":143,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,5,20,41,70],[0,2,39,51],[0,4,56,67],[0,10,43,57],[0,18,35,60],[0,7,23,45,71],[0,3,61,69],[0,6,40,68],[0,13,32,59],[0,9,53],[0,1,31,55]]},{"id":"A:v=155","g":1,"t":155,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,6,21,56,76],[0,13,41,59],[0,1,26,58],[0,3,45,67],[0,5,43,73],[0,8,24,60,77],[0,23,33,72],[0,2,29,63],[0,4,44,75],[0,9,74],[0,11,48,62],[0,47,54,66]]},{"id":"A:v=161","g":1,"t":161,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,9,31,61,79],[0,2,39,67],[0,7,45,78],[0,16,58,75],[0,4,10],[0,11,34,66,80],[0,3,57,77],[0,8,51,64],[0,26,47,76],[0,15,40],[0,1,36,63],[0,5,49,73],[0,12,53,72]]},{"id":"A:v=167","g":1,"t":167,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,6,25,57,83],[0,2,44,67],[0,5,52,76],[0,36,64,74],[0,14,30],[0,7,27,60,82],[0,3,46,59],[0,9,48,79],[0,37,49,66],[0,15,78],[0,1,41,62],[0,4,54,72],[0,11,45,80],[0,8,81]]},{"id":"A:v=173","g":1,"t":173,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,37,71,86],[0,32,67,83],[0,2,28,42],[0,7,59,79],[0,12,48],[0,19,44,62,85],[0,29,60,82],[0,3,73,77],[0,9,65,78],[0,30,80],[0,21,45,84],[0,1,47,55],[0,6,64,81],[0,11,68],[0,5,38]]},{"id":"A:v=179","g":1,"t":179,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,28,60,89],[0,2,51,67],[0,10,66,85],[0,18,82,87],[0,1,38,74],[0,9,30,63,88],[0,3,44,86],[0,15,55,68],[0,22,48,72],[0,12,47],[0,27,31,70],[0,6,77,84],[0,17,62,76],[0,23,34,80]]},{"id":"A:v=185","g":1,"t":185,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,9,33,73,91],[0,3,46,78],[0,7,62,74],[0,22,51,79],[0,10,60],[0,11,36,77,92],[0,4,49,87],[0,8,61,88],[0,23,39,86],[0,14,90],[0,1,35,72],[0,5,59,89],[0,17,48,69],[0,6,19],[0,20,85],[0,2,44,70]]},{"id":"A:v=191","g":1,"t":191,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,6,27,67,95],[0,3,56,75],[0,11,60,90],[0,39,77,85],[0,9,91],[0,7,29,70,94],[0,4,59,84],[0,14,62,78],[0,43,76,88],[0,13,31],[0,1,51,74],[0,10,57,93],[0,26,58,92],[0,44,81,86],[0,15,35],[0,2,54,71]]},{"id":"A:v=197","g":1,"t":197,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,37,55,98],[0,20,77,96],[0,1,33,42],[0,5,51,75],[0,4,48],[0,21,85,92],[0,11,91],[0,2,36,83],[0,6,72,84],[0,17,86],[0,13,73,95],[0,26,79,93],[0,3,52,68],[0,40,90],[0,8,23,62,97],[0,38,63,94],[0,28,58,87]]},{"id":"A:v=203","g":1,"t":203,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,31,67,100],[0,20,80,97],[0,4,49,90],[0,9,57,85],[0,40,96],[0,14,82,98],[0,42,89],[0,5,70,83],[0,11,55,74],[0,34,61,87],[0,24,88,95],[0,1,39,51],[0,6,81,99],[0,3,46],[0,10,35,72,101],[0,21,79,94],[0,2,32,54]]},{"id":"A:v=209","g":1,"t":209,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,37,81,103],[0,3,49,101],[0,9,68,99],[0,25,78,96],[0,4,58,91],[0,21,76],[0,11,26],[0,13,70,102],[0,28,84,100],[0,12,39],[0,1,35,83],[0,5,47,97],[0,14,65,88],[0,6,67],[0,10,40,85,104],[0,2,38,79],[0,7,69,93],[0,20,63,80]]},{"id":"A:v=215","g":1,"t":215,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,7,31,78,106],[0,3,44,103],[0,27,50,89],[0,45,64,94],[0,4,87,95],[0,29,97],[0,20,60],[0,12,38,105],[0,46,61,104],[0,6,92,102],[0,1,33,81],[0,21,84],[0,13,66,82],[0,5,57],[0,9,34,85,107],[0,2,37,79],[0,11,65,101],[0,18,74,88],[0,17,72]]},{"id":"A:v=221","g":1,"t":221,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,5,28,71,110],[0,19,76,106],[0,1,32,36],[0,8,70,81],[0,37,98],[0,10,60,78],[0,15,92],[0,22,85,101],[0,46,55,104],[0,45,51,99],[0,29,88,109],[0,2,26,93],[0,3,47,100],[0,20,84],[0,13,38,65,107],[0,34,75,108],[0,17,89,103],[0,7,90,102],[0,40,96]]},{"id":"A:v=227","g":1,"t":227,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,31,61,112],[0,16,60,105],[0,1,36,65],[0,5,59,102],[0,7,46,108],[0,21,98],[0,19,88],[0,2,40,73],[0,20,92,106],[0,18,67,109],[0,11,94,111],[0,6,84,93],[0,3,58,99],[0,15,90],[0,10,34,66,113],[0,12,80,107],[0,25,82,110],[0,4,52,74],[0,13,50,76]]},{"id":"A:v=233","g":1,"t":233,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,9,36,89,115],[0,4,47,107],[0,18,91,110],[0,5,50,102],[0,10,66],[0,1,38,95],[0,14,72],[0,11,39,93,116],[0,31,51,112],[0,8,75,109],[0,29,46,114],[0,3,44,99],[0,2,42,90],[0,6,71],[0,30,100,113],[0,33,49,111],[0,12,76,98],[0,24,87,108],[0,7,32],[0,35,104],[0,15,74]]},{"id":"A:v=239","g":1,"t":239,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,33,88,118],[0,4,68,115],[0,42,58,102],[0,14,81,113],[0,2,39,93],[0,11,116],[0,9,71],[0,10,36,92,119],[0,45,104,117],[0,49,66,114],[0,1,35,87],[0,20,43,96],[0,22,73,97],[0,15,78],[0,31,101,108],[0,6,100,112],[0,21,40,90],[0,28,46,107],[0,3,41,98],[0,29,103],[0,5,89]]},{"id":"A:v=245","g":1,"t":245,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,7,33,78,122],[0,36,86,117],[0,15,94,112],[0,49,87,116],[0,4,68,76],[0,10,69,85],[0,32,98],[0,40,101,114],[0,27,57,111],[0,25,62,113],[0,21,77,120],[0,9,91,105],[0,2,92,104],[0,5,65],[0,11,28,63,121],[0,46,80,119],[0,48,95,118],[0,3,103,109],[0,1,20,42],[0,53,108],[0,24,107]]},{"id":"A:v=251","g":1,"t":251,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,8,31,71,124],[0,13,102,123],[0,12,97,113],[0,9,61,118],[0,4,81,88],[0,11,69,94],[0,33,80],[0,17,104,122],[0,14,106,121],[0,28,74,76],[0,19,55,117],[0,1,67,112],[0,3,54,103],[0,39,95],[0,10,34,75,125],[0,26,86,108],[0,20,90,119],[0,6,78,120],[0,32,59,96],[0,30,68,73],[0,35,79]]},{"id":"A:v=257","g":1,"t":257,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,39,97,127],[0,16,80,112],[0,4,50,113],[0,34,72,108],[0,9,84,104],[0,22,99],[0,19,98],[0,24,81,106],[0,35,56,124],[0,5,52,119],[0,1,41,101],[0,6,55,121],[0,15,91],[0,7,18],[0,12,43,102,128],[0,2,44,105],[0,8,73,126],[0,37,54,123],[0,3,48,110],[0,27,120],[0,13,83],[0,28,51,122],[0,33,111,125]]},{"id":"A:v=263","g":1,"t":263,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,9,35,98,130],[0,44,50,125],[0,33,51,112],[0,7,106,122],[0,12,123],[0,4,46,104],[0,19,113],[0,52,119,129],[0,54,74,127],[0,57,72,128],[0,22,88,109],[0,8,78,126],[0,1,37,97],[0,13,30],[0,11,38,102,131],[0,2,41,103],[0,14,90,124],[0,25,84,107],[0,3,43,108],[0,49,117],[0,5,85],[0,24,69,116],[0,28,83,114]]},{"id":"A:v=269","g":1,"t":269,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,6,31,72,134],[0,22,92,129],[0,39,98,122],[0,15,97,120],[0,48,115],[0,3,54,117],[0,19,47],[0,21,96,130],[0,18,58,126],[0,17,95,127],[0,26,99,132],[0,2,79,91],[0,1,43,119],[0,7,56],[0,9,45,80,133],[0,27,111,131],[0,13,87,125],[0,11,57,101],[0,5,55,65],[0,8,69,121],[0,4,85],[0,30,94,123],[0,14,100,116]]},{"id":"A:v=275","g":1,"t":275,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,36,81,136],[0,15,110,131],[0,34,67,127],[0,6,49,135],[0,1,41,78],[0,8,76,120],[0,38,94],[0,30,65,134],[0,22,111,128],[0,25,97,121],[0,4,54,118],[0,7,70,99],[0,13,74,88],[0,47,105],[0,12,39,85,137],[0,28,119,130],[0,23,113,132],[0,2,82,124],[0,9,66,117],[0,31,79,84],[0,59,62],[0,32,115,133],[0,16,103,123]]},{"id":"A:v=281","g":1,"t":281,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,12,45,106,140],[0,21,87,123],[0,14,93,112],[0,42,127,138],[0,4,56,121],[0,3,53,116],[0,20,44],[0,18,86,108],[0,28,103,129],[0,5,64,136],[0,1,47,105],[0,6,80,120],[0,8,31],[0,7,77],[0,13,48,110,139],[0,43,82,119],[0,9,78,133],[0,38,122,137],[0,2,51,111],[0,27,134],[0,25,92],[0,10,81,135],[0,41,57,130],[0,32,115,132],[0,30,118]]},{"id":"A:v=287","g":1,"t":287,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,37,108,142],[0,33,95,124],[0,22,66,119],[0,59,83,140],[0,3,45,118],[0,7,96,116],[0,19,77],[0,49,125,136],[0,63,80,141],[0,25,94,117],[0,2,43,113],[0,4,52,127],[0,1,39,107],[0,13,60],[0,12,40,112,143],[0,35,121,137],[0,8,82,138],[0,54,84,139],[0,32,133],[0,14,134],[0,5,51],[0,21,88,114],[0,36,126,135],[0,64,79,129],[0,6,110,128]]},{"id":"A:v=293","g":1,"t":293,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,11,33,78,146],[0,21,114,141],[0,16,87,142],[0,20,110,139],[0,3,63,77],[0,4,88,132],[0,17,125],[0,19,89,124],[0,34,131,137],[0,15,79,133],[0,49,101,144],[0,5,96,134],[0,32,115],[0,7,73],[0,23,51,92,145],[0,57,107,143],[0,13,61,117],[0,18,100,130],[0,1,47,59],[0,8,80,106],[0,10,75],[0,25,127,136],[0,39,76,138],[0,2,42,123],[0,31,116,140]]},{"id":"A:v=299","g":1,"t":299,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,10,41,81,148],[0,25,124,146],[0,11,79,143],[0,33,109,136],[0,6,55,98],[0,3,53,91],[0,51,135],[0,18,122,130],[0,29,106,129],[0,9,70,142],[0,16,117,141],[0,1,46,94],[0,2,58,115],[0,39,126],[0,12,44,86,149],[0,17,119,140],[0,37,73,120],[0,34,131,145],[0,4,69,82],[0,7,66,96],[0,52,114],[0,28,118,144],[0,35,95,110],[0,5,85,139],[0,20,128,147]]},{"id":"A:v=305","g":1,"t":305,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,12,47,116,152],[0,14,109,133],[0,39,72,149],[0,42,134,145],[0,5,67,146],[0,32,106],[0,7,89],[0,40,130,148],[0,41,57,137],[0,43,68,143],[0,44,127,142],[0,3,55,126],[0,9,29],[0,17,93],[0,13,50,120,151],[0,45,136,144],[0,23,84,147],[0,26,112,139],[0,2,53,117],[0,1,49,122],[0,10,88],[0,28,87,125],[0,30,111,132],[0,46,65,131],[0,22,56,150],[0,4,58,118],[0,6,135]]},{"id":"A:v=311","g":1,"t":311,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,11,39,118,154],[0,54,112,129],[0,1,41,117],[0,37,131,147],[0,65,90,152],[0,19,93],[0,5,60],[0,34,105,136],[0,72,84,141],[0,63,95,151],[0,15,104,126],[0,64,91,150],[0,3,49,130],[0,21,98],[0,13,42,122,155],[0,20,119,145],[0,23,70,137],[0,68,92,153],[0,48,66,148],[0,50,101],[0,9,53],[0,35,108,138],[0,52,135,149],[0,6,139,146],[0,38,134,144],[0,4,124,132],[0,2,45,123]]},{"id":"A:v=317","g":1,"t":317,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,15,47,91,158],[0,29,115,152],[0,4,110,116],[0,24,117,153],[0,49,126,134],[0,2,74,140],[0,12,107],[0,109,132,148],[0,58,139,146],[0,19,83,137],[0,26,128,145],[0,56,89,150],[0,5,62,80],[0,31,130],[0,21,59,84,157],[0,35,125,155],[0,11,45,142],[0,13,113,135],[0,27,114,154],[0,10,92],[0,9,78],[0,52,103,156],[0,41,101,149],[0,14,79,147],[0,55,105,151],[0,3,124,144],[0,1,43,71]]},{"id":"A:v=323","g":1,"t":323,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,13,41,81,160],[0,26,137,156],[0,16,94,141],[0,25,132,153],[0,12,110,155],[0,5,61,134],[0,55,148],[0,34,82,152],[0,8,77,109],[0,3,60,99],[0,10,74,154],[0,20,124,151],[0,2,54,92],[0,58,121],[0,15,44,86,161],[0,11,83,150],[0,1,51,88],[0,36,95,138],[0,17,122,140],[0,4,89,120],[0,66,142],[0,24,127,157],[0,22,135,158],[0,6,97,106],[0,35,84,149],[0,14,126,159],[0,7,53,115]]},{"id":"A:v=329","g":1,"t":329,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,12,49,125,163],[0,43,72,158],[0,8,99,161],[0,41,126,145],[0,48,141,148],[0,5,103],[0,4,27],[0,44,146,162],[0,42,73,143],[0,3,58,138],[0,46,64,156],[0,17,123,144],[0,11,107],[0,15,97],[0,14,53,130,164],[0,40,66,149],[0,45,67,157],[0,33,122,154],[0,47,142,152],[0,1,51,129],[0,9,65],[0,24,132,160],[0,30,87,147],[0,2,54,133],[0,20,88,159],[0,36,120,155],[0,6,81,140],[0,25,94],[0,13,74,137]]},{"id":"A:v=335","g":1,"t":335,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,12,41,128,166],[0,5,50,152],[0,67,95,164],[0,68,144,159],[0,56,110,163],[0,3,52,134],[0,17,103],[0,34,113,146],[0,39,71,148],[0,9,120,133],[0,37,143,151],[0,58,117,139],[0,1,43,127],[0,6,24],[0,14,44,132,167],[0,61,92,162],[0,36,47,155],[0,64,80,158],[0,60,150,160],[0,2,48,137],[0,25,129],[0,40,63,161],[0,21,83,157],[0,4,142,149],[0,66,93,165],[0,26,122,141],[0,57,130],[0,51,156],[0,65,85,140]]},{"id":"A:v=341","g":1,"t":341,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,17,47,98,170],[0,21,142,164],[0,11,89,156],[0,23,106,151],[0,20,147,160],[0,10,103],[0,55,149],[0,18,104,150],[0,34,135,154],[0,53,107],[0,31,130,167],[0,27,119,161],[0,2,71,79],[0,62,152],[0,25,137,163],[0,32,129,165],[0,3,105,111],[0,41,116,155],[0,40,131,166],[0,5,73,87],[0,16,74],[0,28,52,85,169],[0,70,146,158],[0,7,66,122],[0,44,124,162],[0,43,139,168],[0,1,61,65],[0,50,113],[0,9,109,157],[0,15,110,159]]},{"id":"A:v=347","g":1,"t":347,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,14,61,91,172],[0,20,142,165],[0,7,75,163],[0,17,143,170],[0,5,103,141],[0,8,71,112],[0,12,132],[0,28,118,147],[0,15,154,167],[0,2,58,123],[0,44,83,150],[0,1,53,102],[0,50,144],[0,35,134],[0,16,64,95,173],[0,73,113,155],[0,18,87,133],[0,34,127,164],[0,4,59,135],[0,3,57,100],[0,60,168],[0,19,70,159],[0,36,128,161],[0,11,96,162],[0,32,148,169],[0,10,72,117],[0,6,80,166],[0,26,110],[0,22,146,171],[0,24,129,138]]},{"id":"A:v=353","g":1,"t":353,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,14,51,133,175],[0,18,107,169],[0,6,69,164],[0,20,120,168],[0,32,110,145],[0,60,140],[0,7,75],[0,36,132,166],[0,22,106,172],[0,19,90,162],[0,1,53,139],[0,25,104,174],[0,2,58,156],[0,3,13],[0,23,117,157],[0,41,118,167],[0,31,55,147],[0,45,74,173],[0,33,135,144],[0,15,108],[0,8,67],[0,16,54,137,176],[0,46,127,171],[0,43,64,155],[0,47,73,170],[0,30,131,159],[0,4,61,146],[0,17,105],[0,50,153,165],[0,27,136,141],[0,11,76,163]]},{"id":"A:v=359","g":1,"t":359,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,13,43,138,178],[0,41,122,158],[0,1,45,137],[0,63,87,176],[0,73,101,177],[0,8,60,168],[0,4,159],[0,15,46,142,179],[0,32,150,162],[0,5,115,166],[0,75,131,153],[0,26,53,152],[0,14,62],[0,50,140],[0,20,144,169],[0,68,106,175],[0,39,93,148],[0,66,85,171],[0,58,79,170],[0,7,64,146],[0,3,119],[0,42,71,174],[0,33,121,156],[0,6,134,151],[0,61,72,172],[0,59,157,173],[0,2,49,143],[0,23,97],[0,65,83,167],[0,34,154,163],[0,70,80,147]]},{"id":"A:v=365","g":1,"t":365,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,29,93,151,182],[0,37,134,167],[0,43,94,174],[0,11,114,169],[0,15,150,172],[0,38,140],[0,3,108],[0,14,152,170],[0,17,96,117],[0,25,85,166],[0,49,111,178],[0,34,149,162],[0,2,74,84],[0,5,104],[0,20,143,175],[0,52,118,179],[0,48,98,173],[0,9,142,168],[0,30,154,177],[0,16,164],[0,7,139],[0,36,90,137,181],[0,78,119,161],[0,71,77,163],[0,56,113,176],[0,68,121,180],[0,1,46,70],[0,4,110],[0,76,88,116],[0,35,144,171],[0,65,73,160],[0,39,146,165]]},{"id":"A:v=371","g":1,"t":371,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,14,61,94,184],[0,30,147,171],[0,8,67,132],[0,35,88,173],[0,12,139,146],[0,1,55,96],[0,71,176],[0,16,64,98,185],[0,42,116,162],[0,32,83,174],[0,11,133,177],[0,15,92,167],[0,3,63,100],[0,10,113],[0,26,144,175],[0,22,151,179],[0,2,58,101],[0,36,112,181],[0,20,126,135],[0,45,154],[0,40,102],[0,19,159,172],[0,38,119,168],[0,4,108,114],[0,39,107,164],[0,27,158,183],[0,5,78,148],[0,66,150],[0,21,93,182],[0,17,128,180],[0,29,79,165],[0,23,160,178]]},{"id":"A:v=377","g":1,"t":377,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,16,54,141,187],[0,7,120,179],[0,50,80,182],[0,52,164,178],[0,49,158,177],[0,2,60,157],[0,20,83],[0,18,57,145,188],[0,21,116,183],[0,42,77,180],[0,45,74,181],[0,10,100,161],[0,24,134],[0,12,25],[0,22,140,174],[0,40,139,175],[0,27,92,186],[0,41,142,165],[0,15,108,184],[0,9,81,163],[0,8,78],[0,44,130,167],[0,47,143,176],[0,26,111],[0,3,69,153],[0,4,75,148],[0,1,56,147],[0,5,119],[0,53,64,168],[0,32,121,149],[0,6,68,166],[0,48,79,185],[0,51,156,173]]},{"id":"A:v=383","g":1,"t":383,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,14,45,148,190],[0,62,168,187],[0,44,81,167],[0,80,97,169],[0,28,82,172],[0,12,178],[0,6,155],[0,34,118,173],[0,58,165,180],[0,68,91,184],[0,78,113,188],[0,2,51,153],[0,59,128],[0,13,70],[0,16,48,152,191],[0,60,159,181],[0,43,73,185],[0,40,76,164],[0,26,53,158],[0,3,64,160],[0,18,101],[0,71,95,182],[0,66,174,183],[0,65,94,179],[0,63,74,189],[0,4,56,154],[0,1,47,147],[0,5,135],[0,33,162,170],[0,21,141,161],[0,7,138,163],[0,38,79,171],[0,67,77,186],[0,50,177]]},{"id":"A:v=389","g":1,"t":389,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,13,78,110,194],[0,47,135,187],[0,35,75,179],[0,21,143,182],[0,34,145,176],[0,15,114],[0,12,80],[0,29,86,123,193],[0,33,150,186],[0,3,51,149],[0,56,120,192],[0,38,141,185],[0,2,81,95],[0,76,166],[0,20,151,178],[0,58,124,191],[0,54,82,167],[0,50,105,188],[0,25,162,184],[0,46,152],[0,42,168],[0,26,160,183],[0,43,170,175],[0,7,155,172],[0,45,154,173],[0,59,112,189],[0,1,63,74],[0,49,174],[0,18,89,119],[0,61,121,190],[0,6,169,177],[0,41,156,180],[0,10,102,118],[0,4,91,100]]},{"id":"A:v=395","g":1,"t":395,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,14,61,94,196],[0,19,167,190],[0,32,85,176],[0,24,153,179],[0,28,166,191],[0,3,71,161],[0,5,109],[0,16,64,98,197],[0,21,157,193],[0,37,93,188],[0,11,107,194],[0,22,156,187],[0,42,125],[0,39,178],[0,52,140,195],[0,13,119,137],[0,2,69,123],[0,43,92,173],[0,7,120,192],[0,4,74,118],[0,60,170],[0,27,128,168],[0,50,147,177],[0,12,75,186],[0,41,103,149],[0,17,159,169],[0,1,66,117],[0,6,132],[0,9,131,189],[0,15,115,160],[0,20,79,184],[0,29,86,175],[0,38,73,150],[0,8,84,162]]},{"id":"A:v=401","g":1,"t":401,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,20,56,151,199],[0,26,129,160],[0,46,81,196],[0,25,137,166],[0,34,154,187],[0,23,128],[0,5,77],[0,22,60,157,200],[0,12,106,194],[0,53,69,186],[0,21,76,189],[0,49,86,195],[0,15,136],[0,7,75],[0,13,96,188],[0,52,142,184],[0,50,82,198],[0,45,130,169],[0,14,87,197],[0,6,71,171],[0,9,127],[0,51,79,190],[0,54,145,192],[0,2,61,163],[0,41,155,185],[0,8,74,172],[0,18,180],[0,3,67],[0,11,119,181],[0,19,123,193],[0,10,99,177],[0,44,84,191],[0,24,149,176],[0,1,58,159],[0,4,126],[0,17,80,173]]},{"id":"A:v=407","g":1,"t":407,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,15,47,158,202],[0,76,171,183],[0,11,66,179],[0,18,141,169],[0,14,147,181],[0,9,36],[0,4,142],[0,17,50,162,203],[0,65,182,192],[0,37,67,185],[0,24,149,174],[0,43,144,189],[0,1,49,157],[0,21,106],[0,77,100,196],[0,78,116,200],[0,2,53,163],[0,70,92,194],[0,64,132,195],[0,3,57,191],[0,52,114],[0,81,121,201],[0,16,105,193],[0,7,172,180],[0,69,82,197],[0,42,139,178],[0,5,61,159],[0,59,199],[0,99,130,190],[0,90,109,184],[0,6,135,170],[0,46,72,198],[0,83,103,176],[0,71,175],[0,74,160],[0,79,137,166]]},{"id":"A:v=425","g":1,"t":425,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,24,58,161,211],[0,18,129,199],[0,52,89,208],[0,55,154,195],[0,12,128,201],[0,2,64,170],[0,7,28],[0,26,61,165,212],[0,17,100,190],[0,3,66,174],[0,1,60,167],[0,15,130,206],[0,22,136],[0,8,134],[0,23,118,205],[0,40,160,192],[0,11,79,188],[0,46,184,203],[0,16,101,194],[0,14,135],[0,10,88],[0,27,124,210],[0,54,148,204],[0,51,84,209],[0,39,185,198],[0,48,144,197],[0,4,69,179],[0,20,132],[0,57,82,180],[0,45,162,200],[0,5,77,169],[0,49,91,196],[0,43,145,176],[0,6,81],[0,67,141],[0,9,131,202],[0,30,143,172],[0,44,80,207]]},{"id":"A:v=431","g":1,"t":431,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,23,49,203,215],[0,56,116,175],[0,5,183,201],[0,94,113,191],[0,81,114,204],[0,4,61,167],[0,6,171],[0,41,75,211,214],[0,62,133,200],[0,48,83,209],[0,91,108,195],[0,70,185,205],[0,1,51,169],[0,8,164],[0,74,159,199],[0,77,105,207],[0,72,86,213],[0,37,181,194],[0,84,148,179],[0,76,197],[0,9,143],[0,82,103,210],[0,65,158,182],[0,69,96,206],[0,44,142,184],[0,80,112,212],[0,2,54,174],[0,15,58],[0,89,155,177],[0,16,147,202],[0,47,92,193],[0,25,176,187],[0,36,160,189],[0,68,190],[0,10,73],[0,38,149,188],[0,79,109,208],[0,46,53,198]]},{"id":"A:v=449","g":1,"t":449,"h":1,"flavor":"pdf","K":[3,4,5],"source":"A","blocks":[[0,28,63,175,224],[0,18,106,189],[0,56,90,219],[0,42,173,206],[0,9,105,191],[0,31,140],[0,8,144],[0,30,67,178,223],[0,36,174,198],[0,1,66,180],[0,40,159,186],[0,11,95,221],[0,54,92,220],[0,10,25],[0,13,152,216],[0,52,100,197],[0,3,72,187],[0,53,157,208],[0,2,70,183],[0,14,151],[0,12,89],[0,29,132,214],[0,43,170,211],[0,7,130,209],[0,44,194,213],[0,4,75,192],[0,59,76,177],[0,20,154],[0,16,110,217],[0,22,121,212],[0,5,78,200],[0,61,142,204],[0,46,85,218],[0,21,141],[0,26,124],[0,47,149,207],[0,57,165,215],[0,6,80,205],[0,60,153,176],[0,55,87,222]]},{"id":"B:t=6","g":4,"t":6,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,4,9,11]]},{"id":"B:t=12","g":4,"t":12,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,9,20],[0,4,18],[0,5,21],[0,7,22],[0,10,23]]},{"id":"B:t=18","g":4,"t":18,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,7,24],[0,8,35],[0,10,29],[0,12,32],[0,14,30],[0,5,31],[0,9,34],[0,11,33],[0,13,28]]},{"id":"B:t=24","g":4,"t":24,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,7,20,41],[0,4,30],[0,9,47],[0,12,44],[0,16,39],[0,2,17],[0,5,36],[0,10,43],[0,14,42],[0,18,45],[0,3,25],[0,8,37],[0,11,46]]},{"id":"B:t=30","g":4,"t":30,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,32,56],[0,13,20,41,59],[0,23,50],[0,8,52],[0,12,48],[0,22,47],[0,15,34],[0,4,9,42,58],[0,6,17,43,57],[0,10,45]]},{"id":"B:t=36","g":4,"t":36,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,38,68],[0,4,9,43,70],[0,12,64],[0,19,60],[0,22,55],[0,20,51],[0,8,62],[0,14,25,42,71],[0,6,13,53,69],[0,15,59],[0,23,49],[0,10,58],[0,18,50],[0,21,45]]},{"id":"B:t=42","g":4,"t":42,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,44,77],[0,10,21,58,81],[0,13,51,67,82],[0,4,9,49,79],[0,8,65],[0,26,73],[0,14,66],[0,12,34,62,80],[0,20,27,59,83],[0,6,25,61,78],[0,29,64]]},{"id":"B:t=48","g":4,"t":48,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,50,89],[0,8,18,71,93],[0,17,33,74,95],[0,23,79],[0,28,65],[0,14,81],[0,25,68],[0,4,9,55,91],[0,11,30,70,94],[0,12,38,72,92],[0,29,73],[0,31,66],[0,15,76],[0,27,69],[0,6,13,58,90]]},{"id":"B:t=54","g":4,"t":54,"h":1,"flavor":"pdf","K":[3,5],"source":"B","blocks":[[0,1,3,56,99],[0,26,67,89,101],[0,24,72,92,103],[0,18,64],[0,32,81],[0,10,94],[0,21,80],[0,4,9,66,104],[0,16,58,87,102],[0,23,50,83,97],[0,36,76],[0,39,91],[0,13,106],[0,28,105],[0,19,25,70,107],[0,8,69],[0,7,85],[0,17,90],[0,30,65]]},{"id":"C:t=14","g":4,"t":14,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,9,22,25],[0,4,10,15,27],[0,2,20],[0,7,26]]},{"id":"C:t=20","g":4,"t":20,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,7,32],[0,5,13,28,39],[0,9,30],[0,12,36],[0,16,38],[0,17,35],[0,10,37],[0,14,33]]},{"id":"C:t=26","g":4,"t":26,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,4,25,38],[0,2,7,29,43],[0,8,47],[0,12,44],[0,17,50],[0,19,42],[0,10,45],[0,16,46],[0,18,49],[0,20,48],[0,6,15],[0,11,51]]},{"id":"C:t=32","g":4,"t":32,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,34,59],[0,9,20,46,63],[0,15,42,50,55],[0,14,21,44,62],[0,24,53],[0,16,52],[0,22,60],[0,4,10,49,61],[0,19,47]]},{"id":"C:t=38","g":4,"t":38,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,40,71],[0,8,19,65,75],[0,6,13,55,72],[0,22,54],[0,25,52],[0,18,61],[0,24,50],[0,4,9,45,73],[0,16,30,51,74],[0,29,63],[0,15,62],[0,12,60],[0,20,53]]},{"id":"C:t=44","g":4,"t":44,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,46,83],[0,20,32,60,86],[0,16,78],[0,22,51],[0,25,63],[0,19,77],[0,7,56],[0,5,9,74,84],[0,6,14,48,87],[0,23,64],[0,27,57],[0,11,61],[0,21,76],[0,24,71],[0,15,33,68,85],[0,31,67],[0,13,72]]},{"id":"C:t=50","g":4,"t":50,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,49,92],[0,15,26,70,97],[0,22,67,84,98],[0,18,37,75,96],[0,12,81],[0,29,68],[0,8,73],[0,4,9,60,94],[0,6,58,86,93],[0,20,33,74,99],[0,23,53,63,95],[0,16,77],[0,36,83],[0,24,88]]},{"id":"C:t=56","g":4,"t":56,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,58,101],[0,16,64,92,111],[0,22,73,93,110],[0,27,109],[0,33,77],[0,21,106],[0,4,9,63,103],[0,6,13,66,102],[0,25,75,90,104],[0,11,83],[0,31,80],[0,34,108],[0,8,18,70,105],[0,26,38,68,107],[0,23,84],[0,32,78],[0,41,86],[0,24,91]]},{"id":"C:t=62","g":4,"t":62,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,64,113],[0,25,47,100,121],[0,26,43,83,116],[0,15,95],[0,29,122],[0,35,86],[0,4,9,69,115],[0,6,13,72,114],[0,27,81,105,119],[0,16,118],[0,30,85],[0,37,104],[0,8,18,76,117],[0,20,39,91,123],[0,23,120],[0,31,87],[0,44,89],[0,11,88],[0,28,107],[0,34,70],[0,48,98],[0,12,94]]},{"id":"C:t=68","g":4,"t":68,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,70,125],[0,29,56,91,133],[0,23,38,82,130],[0,11,100,116,128],[0,40,113],[0,13,112],[0,46,111],[0,4,9,75,127],[0,34,51,87,132],[0,14,74,115,135],[0,37,95],[0,50,114],[0,10,57,96,129],[0,25,88,109,131],[0,6,32,108,126],[0,8,93],[0,19,97],[0,7,90],[0,31,80,110,134]]},{"id":"C:t=74","g":4,"t":74,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,76,130],[0,26,86,120,147],[0,14,38,106,136],[0,23,114],[0,42,138],[0,37,100],[0,28,50,90,143],[0,6,13,84,131],[0,35,56,105,144],[0,8,119],[0,25,112],[0,43,101],[0,10,46,113,145],[0,16,57,123,140],[0,11,29,80,139],[0,12,116],[0,31,126],[0,48,133],[0,33,52,97,141],[0,4,9,81,146],[0,55,134],[0,15,132],[0,20,102]]},{"id":"C:t=80","g":4,"t":80,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,82,146],[0,33,92,136,152],[0,4,9,87,148],[0,10,75],[0,23,131],[0,43,158],[0,34,110,135,155],[0,6,13,90,147],[0,35,54,107,153],[0,14,109],[0,24,149],[0,48,114],[0,28,40,140,151],[0,36,58,105,156],[0,17,150],[0,31,127],[0,49,122],[0,18,124],[0,29,68,142,157],[0,37,63,104,154],[0,38,94],[0,52,138],[0,21,137],[0,42,130],[0,30,62,132,159],[0,55,126],[0,8,93]]},{"id":"C:t=86","g":4,"t":86,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,88,152],[0,16,83,94,163],[0,34,106,141,162],[0,36,61,111,170],[0,48,119],[0,27,157],[0,26,45,126,169],[0,40,98,137,161],[0,6,13,114,166],[0,38,120,140,171],[0,55,132],[0,14,136],[0,30,92,145,168],[0,8,65,112,156],[0,37,110,142,164],[0,18,135],[0,60,139],[0,15,118],[0,12,29,125,158],[0,42,70,116,165],[0,4,9,93,159],[0,68,167],[0,10,154],[0,41,131]]},{"id":"C:t=92","g":4,"t":92,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,3,94,158],[0,38,65,120,177],[0,46,121,152,174],[0,32,182],[0,68,170],[0,10,76],[0,19,39,154,175],[0,15,101,137,179],[0,6,13,116,172],[0,50,146],[0,40,117],[0,72,151],[0,8,127,138,171],[0,12,35,109,180],[0,4,9,99,169],[0,48,173],[0,85,143],[0,17,140],[0,14,98,114,161],[0,41,124,149,183],[0,28,52,132,181],[0,87,148],[0,18,144],[0,54,167],[0,37,67,118,178],[0,45,107,133,176],[0,89,162],[0,29,134]]},{"id":"C:t=98","g":4,"t":98,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,23,100,156],[0,40,113,157,194],[0,45,109,161,187],[0,2,67,139,170],[0,11,107],[0,32,112],[0,33,54,158,183],[0,41,68,127,190],[0,6,75,165,181],[0,42,124,160,195],[0,9,152],[0,43,166],[0,8,105,179,193],[0,46,70,131,191],[0,47,62,177,182],[0,13,132,151,180],[0,51,162],[0,76,178],[0,38,50,164,184],[0,49,79,136,189],[0,18,84,101,192],[0,39,94,128,186],[0,10,173],[0,93,188],[0,28,169,172,176]]},{"id":"C:t=104","g":4,"t":104,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,39,107,184],[0,49,86,136,202],[0,20,103,194,200],[0,2,123,142,198],[0,22,161],[0,16,154],[0,17,122,146,204],[0,5,113,117,182],[0,40,81,128,206],[0,51,144,169,203],[0,3,151],[0,29,188],[0,12,96,111,190],[0,43,115,175,205],[0,18,119,127,189],[0,33,143,170,191],[0,7,192],[0,53,167],[0,42,73,134,197],[0,46,98,126,193],[0,9,181],[0,54,195],[0,11,179],[0,55,157],[0,44,76,133,207],[0,26,176,186,199],[0,45,130,165,201],[0,14,149],[0,64,164]]},{"id":"C:t=110","g":4,"t":110,"h":1,"flavor":"pdf","K":[3,5],"source":"C","blocks":[[0,1,23,112,185],[0,52,152,173,212],[0,2,20,127,189],[0,55,101,157,200],[0,67,206],[0,9,126],[0,3,61,196,208],[0,28,158,182,207],[0,68,201],[0,10,188],[0,76,195],[0,11,120],[0,45,79,143,215],[0,54,95,198,213],[0,47,84,141,218],[0,75,156],[0,13,177],[0,86,174],[0,48,140,172,214],[0,78,191],[0,16,197],[0,87,138],[0,4,108],[0,17,123],[0,40,137,168,203],[0,44,82,175,211],[0,91,150],[0,5,204],[0,30,146],[0,83,153],[0,26,53,122,202],[0,6,216],[0,50,192],[0,85,148],[0,7,190],[0,71,186],[0,29,161,180,194],[0,90,155],[0,8,217],[0,105,219]]},{"id":"L8t:t=12","g":4,"t":12,"h":2,"flavor":"hpdf","K":[3,5],"source":"8t-2pdf","blocks":[[0,1,20],[0,3,62],[0,5,69],[0,17,70],[0,13,22,52,68],[0,2,10],[0,4,71],[0,6,21],[0,23,58],[0,11,18,51,65]]},{"id":"L8t:t=18","g":4,"t":18,"h":2,"flavor":"hpdf","K":[3,5],"source":"8t-2pdf","blocks":[[0,1,21],[0,4,27],[0,7,88],[0,10,103],[0,14,105],[0,19,34,76,104],[0,2,24],[0,5,82],[0,8,100],[0,11,89],[0,16,95],[0,17,30,75,101],[0,3,32],[0,6,31],[0,9,107],[0,12,106],[0,33,80],[0,35,83]]},{"id":"L8t:t=8","g":4,"t":8,"h":2,"flavor":"hpdf","K":[3,5],"source":"8t-2pdf","blocks":[[0,1,3,7,44],[0,5,14],[0,10,45],[0,11,47],[0,12,34],[0,13,38],[0,15,33]]},{"id":"L8t:t=14","g":4,"t":14,"h":2,"flavor":"hpdf","K":[3,5],"source":"8t-2pdf","blocks":[[0,1,10],[0,4,12],[0,7,81],[0,21,82],[0,15,26,58,83],[0,2,18],[0,5,71],[0,13,78],[0,22,59],[0,24,60],[0,3,20],[0,6,79],[0,19,64],[0,23,63],[0,27,62]]},{"id":"F:t=29","g":4,"t":29,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,3,69],[0,11,86],[0,16,83],[0,18,82],[0,24,77],[0,1,6,20,27],[0,4,74],[0,12,85],[0,17,79],[0,22,78],[0,28,76],[0,2,10,25,61],[0,9,81],[0,13,84]]},{"id":"F:t=35","g":4,"t":35,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,32,78,104],[0,4,20],[0,7,34],[0,10,96],[0,13,100],[0,25,81],[0,3,33,76,98],[0,5,23],[0,8,82],[0,11,102],[0,14,99],[0,28,80],[0,2,19],[0,6,21],[0,9,92],[0,12,101],[0,24,71],[0,29,79]]},{"id":"F:t=17","g":4,"t":17,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,5,11,48],[0,3,16,35,44],[0,2,14],[0,7,46],[0,8,50],[0,15,38]]},{"id":"F:t=23","g":4,"t":23,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,5,11,20],[0,7,55],[0,12,64],[0,17,67],[0,21,56],[0,22,53],[0,2,49,62,65],[0,8,66],[0,14,68],[0,18,51]]},{"id":"F:t=41","g":4,"t":41,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,38,90,122],[0,2,25],[0,7,35],[0,11,110],[0,15,107],[0,18,119],[0,3,39,86,116],[0,4,26],[0,8,93],[0,12,115],[0,16,118],[0,20,111],[0,19,114],[0,5,29],[0,9,40],[0,13,109],[0,17,105],[0,34,94],[0,33,100],[0,6,27],[0,10,108],[0,14,120]]},{"id":"F:t=15","g":4,"t":15,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,3,12,20],[0,4,25],[0,5,28],[0,6,24],[0,7,29],[0,10,26],[0,13,27]]},{"id":"F:t=9","g":4,"t":9,"h":1,"flavor":"cdf","K":[3,5],"source":"F","blocks":[[0,1,3,13,17],[0,5,11],[0,7,15]]},{"id":"G:t=12","g":16,"t":12,"h":1,"flavor":"cdf","K":[3,5],"source":"G","blocks":[[0,1,34],[0,6,128],[0,11,126],[0,19,142],[0,27,136],[0,30,119],[0,2,37],[0,7,131],[0,15,140],[0,20,137],[0,28,134],[0,31,44],[0,3,41],[0,8,105],[0,16,127],[0,21,135],[0,18,130],[0,32,46],[0,4,43],[0,9,138],[0,17,102],[0,26,139],[0,29,133],[0,25,47,118,141],[0,5,45],[0,10,110],[0,42,143]]},{"id":"G:t=24","g":16,"t":24,"h":1,"flavor":"cdf","K":[3,5],"source":"G","blocks":[[0,1,45],[0,5,89],[0,9,91],[0,16,78],[0,26,287],[0,74,265],[0,2,30],[0,6,40],[0,10,66],[0,18,88],[0,42,284],[0,90,239],[0,3,54],[0,7,93],[0,12,76],[0,20,263],[0,52,286],[0,92,214],[0,4,36],[0,8,58],[0,14,94],[0,22,60],[0,68,237],[0,49,95,238,285],[0,11,244],[0,13,245],[0,15,246],[0,17,247],[0,19,248],[0,21,249],[0,23,250],[0,25,251],[0,27,252],[0,29,253],[0,31,254],[0,33,255],[0,35,256],[0,37,257],[0,39,258],[0,41,259],[0,43,260],[0,53,266],[0,55,267],[0,57,268],[0,59,269],[0,61,270],[0,63,271],[0,65,272],[0,67,273],[0,69,274],[0,71,275],[0,73,276],[0,75,277],[0,77,278],[0,79,279],[0,81,280],[0,83,281],[0,85,282],[0,87,283]]},{"id":"G:t=14","g":16,"t":14,"h":1,"flavor":"cdf","K":[3,5],"source":"G","blocks":[[0,1,39],[0,6,52],[0,11,163],[0,17,155],[0,26,156],[0,33,53],[0,2,43],[0,7,123],[0,12,47],[0,19,147],[0,27,151],[0,34,165],[0,3,40],[0,8,127],[0,13,159],[0,21,162],[0,30,166],[0,49,148],[0,4,48],[0,9,129],[0,15,160],[0,36,158],[0,32,153],[0,29,54,143,161],[0,5,50],[0,10,149],[0,16,150],[0,51,118],[0,23,167],[0,31,55,142,164]]},{"id":"G:t=26","g":16,"t":26,"h":1,"flavor":"cdf","K":[3,5],"source":"G","blocks":[[0,1,51],[0,7,54],[0,14,70],[0,20,303],[0,74,306],[0,96,258],[0,2,38],[0,8,94],[0,16,60],[0,24,309],[0,76,231],[0,98,281],[0,3,93],[0,9,97],[0,22,84],[0,34,66],[0,89,101],[0,99,259],[0,5,87],[0,10,40],[0,4,311],[0,68,282],[0,92,304],[0,53,102,263,305],[0,6,64],[0,11,91],[0,18,302],[0,72,100],[0,95,310],[0,55,103,262,308],[0,13,264],[0,15,265],[0,17,266],[0,19,267],[0,21,268],[0,23,269],[0,25,270],[0,27,271],[0,29,272],[0,31,273],[0,33,274],[0,35,275],[0,37,276],[0,39,277],[0,41,278],[0,43,279],[0,45,280],[0,57,287],[0,59,288],[0,61,289],[0,63,290],[0,65,291],[0,67,292],[0,69,293],[0,71,294],[0,73,295],[0,75,296],[0,77,297],[0,79,298],[0,81,299],[0,83,300],[0,85,301]]},{"id":"Ex:cdf-256-32","g":32,"t":8,"h":1,"flavor":"cdf","K":[3,5],"source":"Ex-CDF","blocks":[[0,1,45],[0,7,58],[0,17,172],[0,33,181],[0,38,179],[0,25,191],[0,2,49],[0,9,130],[0,18,132],[0,35,178],[0,62,165],[0,26,164],[0,3,46],[0,10,177],[0,20,189],[0,36,183],[0,27,186],[0,42,55],[0,4,54],[0,11,182],[0,22,173],[0,37,187],[0,28,185],[0,61,163],[0,5,57],[0,12,174],[0,23,134],[0,30,170],[0,39,60],[0,15,34,161,190],[0,6,59],[0,14,133],[0,63,131],[0,31,180],[0,41,158]]},{"id":"ExPDF:v=13","g":1,"t":13,"h":1,"flavor":"pdf","K":[4],"source":"Ex-PDF","blocks":[[0,1,4,6]]},{"id":"ExPDF:v=33","g":1,"t":33,"h":1,"flavor":"pdf","K":[3,5],"source":"Ex-PDF","blocks":[[0,1,6,14,16],[0,3,12],[0,4,11]]},{"id":"ExPDF:v=59","g":1,"t":59,"h":1,"flavor":"pdf","K":[3,4,5],"source":"Ex-PDF","blocks":[[0,1,6,23,26],[0,7,15,19,28],[0,11,27,29],[0,14,24]]},{"id":"ExPDF:v=71","g":1,"t":71,"h":1,"flavor":"pdf","K":[3,5],"source":"Ex-PDF","blocks":[[0,1,3,10,27],[0,4,15,29,35],[0,5,28],[0,8,30],[0,12,33],[0,13,32],[0,16,34]]},{"id":"Ex2.9:g=8,t=8","g":8,"t":8,"h":1,"flavor":"pdf","K":[3,5],"source":"Ex-PRDF","blocks":[[0,1,3,7,26],[0,5,27],[0,9,21],[0,10,28],[0,11,31],[0,13,30],[0,14,29]]},{"id":"Ex2.9:g=16,t=6","g":16,"t":6,"h":1,"flavor":"pdf","K":[3,5],"source":"Ex-PRDF","blocks":[[0,1,4,11,26],[0,8,40],[0,13,44],[0,16,45],[0,19,47],[0,2,35],[0,5,39],[0,9,46],[0,14,41],[0,17,38],[0,20,43]]},{"id":"Ex2.10:g=8,t=8","g":8,"t":8,"h":2,"flavor":"hpdf","K":[3,5],"source":"Ex-hPDF","blocks":[[0,1,4,21,30],[0,2,7,25,67],[0,11,90],[0,13,94],[0,15,91],[0,22,66],[0,6,75],[0,10,87],[0,12,95],[0,14,92],[0,19,93],[0,27,73],[0,28,71],[0,31,70]]},{"id":"Ex2.10:g=16,t=6","g":16,"t":6,"h":2,"flavor":"hpdf","K":[3,5],"source":"Ex-hPDF","blocks":[[0,1,14,47,135],[0,15,41,97,142],[0,7,131],[0,19,128],[0,25,137],[0,2,11,31,118],[0,17,40,103,140],[0,10,44],[0,21,143],[0,28,141],[0,3,8,35,133],[0,4,43],[0,16,115],[0,22,139],[0,38,111]]},{"id":"Ex2.11","g":4,"t":6,"h":4,"flavor":"hpdf","K":[3,5],"source":"Ex-4PDF","blocks":[[0,1,4,11,26],[0,2,29],[0,5,33],[0,8,59],[0,9,49],[0,31,83],[0,32,82],[0,34,53],[0,35,55],[0,57,73],[0,58,75]]}],"pair_partitions":[{"d":17,"u":38,"c":12,"pairs":[[13,41],[14,43],[15,45],[16,47],[17,58],[19,61],[21,60],[23,63],[25,62],[27,65],[29,64],[10,35],[11,59],[31,75],[32,77],[33,76],[36,68],[22,73],[24,44],[28,50],[34,53],[1,37],[2,49],[3,56],[4,38],[5,54],[6,39],[7,57],[8,26],[9,55],[18,70],[20,74],[30,51],[40,67],[42,66],[46,72],[48,71],[52,69]]},{"d":17,"u":42,"c":14,"pairs":[[10,36],[21,55],[23,58],[25,61],[27,64],[29,74],[31,77],[33,80],[35,78],[37,79],[39,83],[40,81],[43,82],[45,85],[46,84],[11,59],[12,62],[13,65],[15,66],[16,69],[17,50],[19,68],[38,70],[41,71],[42,73],[1,56],[2,20],[3,57],[4,60],[5,22],[6,63],[7,26],[8,30],[9,67],[18,47],[24,49],[28,51],[32,53],[34,54],[44,72],[48,75],[52,76]]},{"d":17,"u":46,"c":16,"pairs":[[21,55],[23,58],[25,61],[27,64],[29,67],[31,70],[33,79],[35,84],[37,85],[39,86],[41,91],[43,87],[45,88],[47,89],[48,93],[50,90],[51,92],[13,65],[14,68],[15,71],[17,72],[19,76],[40,69],[42,73],[44,74],[46,78],[49,82],[52,80],[11,62],[1,20],[2,60],[3,63],[4,66],[5,26],[6,59],[7,24],[8,28],[9,32],[10,34],[12,38],[18,77],[22,83],[30,57],[36,54],[53,75],[56,81]]},{"d":17,"u":50,"c":18,"pairs":[[17,50],[22,56],[23,58],[25,61],[27,64],[29,67],[31,70],[33,73],[35,76],[37,79],[39,82],[41,85],[43,88],[45,93],[47,97],[49,100],[51,98],[52,101],[53,99],[16,74],[40,96],[42,94],[44,72],[46,75],[48,80],[54,84],[55,86],[11,38],[12,77],[20,83],[24,90],[1,19],[2,21],[3,26],[4,57],[5,60],[6,68],[7,66],[8,28],[9,63],[10,71],[13,30],[14,78],[15,36],[32,92],[34,91],[59,81],[62,87],[65,89],[69,95]]},{"d":17,"u":54,"c":20,"pairs":[[22,56],[23,58],[25,61],[27,64],[29,67],[31,70],[33,73],[35,76],[51,107],[52,109],[53,103],[54,105],[55,108],[57,84],[60,90],[45,93],[47,99],[48,102],[49,104],[17,85],[30,91],[34,96],[50,78],[65,98],[68,92],[69,87],[72,97],[77,106],[37,101],[39,81],[41,88],[1,18],[2,21],[3,24],[4,26],[5,36],[6,66],[7,74],[8,71],[9,32],[10,80],[11,43],[12,38],[13,82],[14,79],[15,59],[16,75],[19,62],[28,94],[40,86],[42,100],[44,89],[46,95],[63,83]]},{"d":17,"u":58,"c":22,"pairs":[[37,79],[39,82],[67,102],[69,109],[71,100],[47,94],[49,97],[17,83],[19,87],[44,78],[46,116],[48,115],[50,80],[53,84],[58,110],[59,117],[60,113],[61,93],[63,96],[26,86],[27,89],[29,90],[31,95],[33,92],[35,98],[62,99],[64,103],[65,101],[66,104],[51,77],[52,107],[55,106],[56,105],[1,18],[2,20],[3,23],[4,25],[5,24],[6,28],[7,34],[8,36],[9,74],[10,81],[11,57],[12,85],[13,70],[14,88],[15,38],[16,72],[21,45],[30,75],[32,76],[40,112],[41,91],[42,111],[43,68],[54,108],[73,114]]},{"d":17,"u":62,"c":24,"pairs":[[37,79],[39,82],[67,102],[69,109],[71,100],[47,94],[49,97],[73,114],[74,118],[76,122],[44,78],[46,116],[48,115],[50,80],[53,84],[58,110],[59,117],[60,113],[61,93],[63,96],[26,86],[27,89],[29,90],[31,95],[33,92],[35,98],[62,99],[64,103],[65,101],[66,104],[51,77],[15,91],[16,72],[17,83],[19,87],[1,18],[2,20],[3,22],[4,25],[5,28],[6,30],[7,57],[8,85],[9,34],[10,81],[11,56],[12,40],[13,68],[14,41],[21,43],[23,88],[32,107],[36,108],[38,111],[42,120],[45,119],[52,106],[54,123],[55,112],[70,121],[75,124],[105,125]]},{"d":17,"u":66,"c":26,"pairs":[[37,79],[39,82],[67,102],[69,109],[71,100],[47,94],[49,97],[19,74],[21,89],[57,133],[63,128],[70,132],[72,129],[81,131],[44,78],[46,116],[48,115],[50,80],[53,84],[58,110],[73,127],[75,119],[76,121],[77,123],[83,124],[56,117],[59,130],[35,98],[62,99],[64,103],[65,101],[66,104],[60,93],[61,112],[42,91],[1,18],[2,20],[3,22],[4,24],[5,27],[6,29],[7,28],[8,32],[9,34],[10,36],[11,38],[12,40],[13,85],[14,88],[15,92],[16,95],[17,86],[23,96],[25,106],[30,108],[31,87],[33,113],[41,105],[43,125],[45,120],[51,111],[52,118],[54,107],[55,114],[68,126],[90,122]]},{"d":17,"u":70,"c":28,"pairs":[[85,141],[87,140],[5,26],[67,102],[69,109],[71,100],[47,94],[49,97],[19,74],[21,89],[57,133],[63,128],[70,132],[72,129],[81,131],[44,78],[46,116],[48,115],[50,80],[53,84],[58,110],[73,127],[75,119],[76,121],[77,123],[83,124],[56,117],[59,130],[35,98],[62,99],[64,103],[65,101],[66,104],[60,93],[61,112],[42,91],[32,111],[33,106],[41,107],[43,120],[1,18],[2,20],[3,22],[4,24],[105,137],[6,29],[7,31],[8,30],[9,34],[10,68],[11,38],[12,40],[13,39],[14,96],[15,90],[16,88],[17,86],[23,82],[25,108],[27,113],[36,114],[37,122],[45,125],[51,135],[52,126],[54,118],[55,136],[79,139],[92,134],[95,138]]},{"d":17,"u":74,"c":30,"pairs":[[85,141],[87,140],[5,26],[67,102],[69,109],[71,100],[88,147],[90,148],[23,95],[57,133],[63,128],[70,132],[72,129],[81,131],[44,78],[46,116],[48,115],[50,80],[122,145],[21,49],[25,114],[27,82],[29,113],[37,127],[39,108],[75,119],[76,121],[77,123],[83,124],[56,117],[59,130],[35,98],[62,99],[64,103],[65,101],[66,104],[60,93],[61,112],[42,91],[32,111],[33,106],[41,107],[43,120],[52,126],[68,149],[79,143],[84,136],[1,18],[2,20],[3,22],[4,24],[105,137],[6,28],[7,34],[8,51],[9,89],[10,36],[11,58],[12,54],[13,38],[14,45],[15,97],[16,94],[17,92],[19,73],[31,118],[40,125],[47,135],[53,139],[55,138],[74,142],[86,146],[96,144],[110,134]]},{"d":17,"u":78,"c":32,"pairs":[[85,141],[87,140],[33,106],[41,107],[69,109],[71,100],[88,147],[90,148],[50,80],[57,133],[63,128],[70,132],[53,134],[55,137],[27,110],[44,78],[46,116],[48,115],[122,145],[23,95],[21,49],[25,114],[54,139],[68,142],[79,157],[29,113],[37,127],[39,108],[11,102],[123,155],[13,105],[83,124],[56,117],[59,130],[35,98],[62,99],[64,103],[65,101],[66,104],[60,93],[61,112],[42,91],[86,138],[89,153],[92,152],[96,144],[73,150],[74,149],[77,121],[81,126],[82,129],[118,143],[2,20],[135,156],[4,24],[5,47],[6,28],[7,75],[8,58],[9,36],[10,34],[14,40],[120,151],[16,51],[17,97],[19,76],[26,72],[30,84],[31,119],[38,125],[43,136],[45,131],[52,146],[111,154],[1,18],[15,94],[12,67],[3,22]]},{"d":17,"u":82,"c":34,"pairs":[[85,141],[87,140],[33,106],[41,107],[69,109],[71,100],[88,147],[90,148],[122,145],[57,133],[63,128],[70,132],[53,134],[55,137],[27,110],[44,78],[46,116],[48,115],[50,80],[23,95],[21,49],[25,114],[54,139],[68,142],[79,157],[29,113],[37,127],[39,108],[11,102],[12,67],[13,105],[83,124],[56,117],[59,130],[35,98],[62,99],[64,103],[65,101],[26,119],[97,165],[104,151],[112,163],[38,125],[45,131],[47,135],[86,138],[89,153],[92,152],[96,144],[91,136],[94,143],[118,164],[123,158],[1,18],[2,20],[3,22],[4,24],[5,30],[6,28],[7,31],[8,40],[9,84],[10,60],[14,111],[15,36],[16,42],[17,74],[19,73],[32,75],[43,76],[51,146],[52,150],[58,154],[61,155],[66,93],[72,149],[77,156],[81,161],[82,126],[120,162],[121,159],[129,160]]},{"d":17,"u":86,"c":36,"pairs":[[85,141],[87,140],[33,106],[41,107],[69,109],[71,100],[88,147],[90,148],[122,145],[57,133],[63,128],[70,132],[53,134],[55,137],[27,110],[44,78],[46,116],[48,115],[50,80],[127,158],[150,171],[25,114],[54,139],[68,142],[79,157],[29,113],[39,108],[11,102],[12,67],[13,105],[83,124],[56,117],[59,130],[35,98],[17,60],[91,129],[92,136],[96,160],[103,149],[118,166],[120,155],[61,161],[65,101],[26,119],[97,165],[104,151],[112,163],[38,125],[45,131],[47,135],[86,138],[93,143],[75,172],[76,170],[77,156],[84,164],[1,18],[2,20],[3,22],[4,24],[5,30],[6,28],[7,31],[8,34],[9,42],[10,37],[14,51],[15,111],[16,58],[19,64],[21,49],[23,121],[32,81],[40,72],[43,144],[52,154],[62,152],[66,126],[73,168],[74,173],[82,159],[89,146],[94,169],[95,167],[99,153],[123,162]]},{"d":17,"u":90,"c":38,"pairs":[[85,141],[112,163],[41,107],[69,109],[71,100],[88,147],[90,148],[98,173],[121,152],[36,93],[143,180],[73,171],[70,132],[45,131],[47,135],[27,110],[44,78],[46,116],[48,115],[50,80],[52,153],[62,159],[74,170],[76,175],[25,114],[54,139],[68,142],[79,157],[29,113],[39,108],[11,102],[12,67],[40,144],[83,124],[56,117],[59,130],[66,168],[72,178],[82,177],[89,179],[94,181],[23,128],[95,167],[99,126],[123,162],[91,129],[92,136],[96,160],[103,149],[118,166],[81,158],[86,138],[87,169],[105,150],[125,174],[133,161],[97,165],[104,151],[33,106],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,42],[13,55],[14,57],[15,65],[16,49],[17,77],[19,119],[21,75],[31,84],[35,127],[37,63],[43,122],[51,154],[53,146],[58,134],[60,140],[61,155],[64,145],[101,164],[111,176],[120,156],[137,172]]},{"d":17,"u":94,"c":40,"pairs":[[85,141],[17,53],[51,77],[60,163],[65,146],[97,165],[41,107],[69,109],[71,100],[88,147],[90,148],[98,173],[121,152],[36,93],[143,180],[73,171],[70,132],[45,131],[47,135],[46,116],[48,115],[50,80],[52,153],[62,159],[74,170],[76,175],[25,114],[54,139],[68,142],[79,157],[29,113],[39,108],[11,102],[83,124],[56,117],[59,130],[84,188],[104,151],[72,178],[82,177],[89,179],[94,181],[23,128],[95,167],[99,126],[123,162],[91,129],[92,136],[96,160],[103,149],[118,166],[81,158],[86,138],[87,169],[61,140],[63,156],[66,168],[75,184],[105,155],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,42],[10,38],[12,55],[13,64],[14,67],[15,49],[16,58],[19,44],[21,101],[27,119],[31,125],[33,133],[34,144],[35,111],[37,145],[43,106],[57,164],[78,161],[110,183],[112,172],[120,174],[122,187],[127,176],[134,189],[137,182],[150,185],[154,186]]},{"d":17,"u":98,"c":42,"pairs":[[85,141],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[127,182],[60,163],[65,146],[97,165],[41,107],[69,109],[71,100],[88,147],[90,148],[98,173],[121,152],[36,93],[143,180],[73,171],[70,132],[45,131],[47,135],[46,116],[48,115],[50,80],[52,153],[62,159],[74,170],[76,175],[25,114],[54,139],[68,142],[79,157],[29,113],[39,108],[11,102],[83,124],[56,117],[59,130],[84,188],[104,151],[72,178],[82,177],[89,179],[94,181],[23,128],[95,167],[99,126],[123,162],[91,129],[92,136],[96,160],[103,149],[118,166],[81,158],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,38],[12,44],[13,49],[14,40],[15,57],[16,51],[17,66],[19,64],[21,55],[27,140],[31,125],[33,133],[35,87],[37,145],[43,155],[53,164],[58,138],[61,168],[63,156],[67,169],[75,154],[77,191],[78,187],[86,196],[101,183],[134,184],[137,190],[144,195],[150,193],[161,194]]},{"d":17,"u":102,"c":44,"pairs":[[85,141],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[127,182],[60,163],[65,146],[97,165],[41,107],[69,109],[71,100],[88,147],[90,148],[98,173],[121,152],[36,93],[143,180],[73,171],[70,132],[45,131],[101,195],[103,183],[118,200],[125,204],[52,153],[62,159],[74,170],[76,175],[25,114],[54,139],[68,142],[79,157],[29,113],[39,108],[11,102],[83,124],[56,117],[59,130],[84,188],[104,151],[72,178],[82,177],[89,179],[94,181],[23,128],[95,167],[99,126],[123,162],[91,129],[92,136],[81,158],[27,77],[31,63],[33,140],[35,144],[37,145],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,38],[12,42],[13,46],[14,40],[15,49],[16,51],[17,53],[19,64],[21,67],[43,154],[47,164],[48,96],[50,138],[55,169],[57,150],[58,160],[61,161],[66,184],[75,187],[78,194],[80,193],[86,196],[87,202],[115,166],[116,168],[133,203],[134,201],[135,199],[137,190],[149,191],[155,198],[156,205]]},{"d":17,"u":106,"c":46,"pairs":[[85,141],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[127,182],[60,163],[65,146],[97,165],[41,107],[115,203],[133,184],[134,198],[135,205],[98,173],[121,152],[36,93],[143,180],[73,171],[70,132],[45,131],[101,195],[103,183],[118,200],[125,204],[61,161],[62,175],[63,160],[155,207],[25,114],[87,208],[90,209],[100,212],[109,211],[39,108],[11,102],[83,124],[56,117],[59,130],[84,188],[104,151],[72,178],[82,177],[89,179],[94,181],[23,128],[95,167],[99,126],[123,162],[91,129],[92,136],[81,158],[113,159],[116,201],[137,196],[33,140],[35,144],[37,145],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,38],[12,42],[13,47],[14,40],[15,44],[16,48],[17,50],[19,54],[21,57],[27,67],[29,71],[31,79],[43,88],[49,142],[51,169],[52,168],[53,154],[55,166],[58,157],[64,138],[66,150],[68,164],[69,191],[74,194],[75,190],[76,193],[77,187],[78,156],[80,147],[86,139],[96,210],[148,206],[149,199],[153,202],[170,213]]},{"d":17,"u":110,"c":48,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[127,182],[60,163],[65,146],[97,165],[41,107],[115,203],[133,184],[134,198],[135,205],[98,173],[121,152],[82,187],[89,212],[102,214],[45,131],[101,195],[103,183],[118,200],[125,204],[61,161],[62,175],[63,160],[155,207],[87,208],[90,209],[83,199],[86,170],[88,210],[96,216],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[94,181],[95,167],[99,126],[123,162],[91,129],[92,136],[81,158],[113,159],[116,201],[137,196],[33,140],[35,144],[77,191],[93,211],[108,218],[114,171],[59,130],[66,164],[68,194],[80,141],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,39],[12,42],[13,46],[14,43],[15,47],[16,50],[17,52],[19,55],[21,58],[23,64],[25,73],[27,67],[29,154],[31,74],[37,79],[38,153],[40,85],[44,145],[49,148],[51,147],[53,109],[54,143],[56,180],[57,168],[69,138],[70,132],[71,179],[72,178],[75,177],[76,193],[78,169],[100,190],[128,221],[157,215]]},{"d":17,"u":114,"c":50,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[47,128],[49,107],[52,148],[54,178],[92,208],[129,222],[154,223],[115,203],[133,184],[134,198],[135,205],[98,173],[121,152],[82,187],[89,212],[102,214],[85,147],[86,170],[97,145],[101,195],[103,183],[118,200],[125,204],[61,161],[114,171],[127,182],[63,160],[155,207],[79,190],[100,227],[109,226],[132,221],[88,210],[96,216],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[94,181],[95,167],[93,211],[108,218],[71,177],[72,180],[73,141],[90,209],[138,228],[168,224],[113,159],[116,201],[137,196],[33,140],[35,144],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,38],[12,40],[13,42],[14,44],[15,48],[16,51],[17,53],[19,56],[21,55],[23,62],[25,57],[27,65],[29,69],[31,75],[37,136],[39,165],[41,162],[43,157],[45,158],[46,91],[58,99],[59,130],[60,163],[64,194],[66,143],[67,153],[68,193],[70,199],[74,175],[76,191],[77,179],[78,169],[80,146],[81,123],[83,126],[87,215],[131,229],[164,225]]},{"d":17,"u":118,"c":52,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[47,128],[54,178],[92,208],[129,222],[154,223],[115,203],[133,184],[134,198],[135,205],[98,173],[121,152],[82,187],[89,212],[102,214],[85,147],[86,170],[97,145],[101,195],[103,183],[118,200],[125,204],[83,215],[130,231],[141,237],[127,182],[63,160],[155,207],[79,190],[100,227],[109,226],[132,221],[88,210],[96,216],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[94,181],[77,162],[80,211],[93,161],[95,167],[116,175],[123,230],[108,218],[107,232],[126,229],[131,233],[143,234],[87,164],[91,224],[114,235],[146,236],[169,225],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,38],[12,40],[13,42],[14,44],[15,48],[16,50],[17,49],[19,55],[21,56],[23,60],[25,64],[27,65],[29,69],[31,72],[33,75],[35,78],[37,81],[39,157],[41,99],[43,171],[45,90],[46,159],[51,165],[53,153],[57,163],[58,144],[59,158],[61,180],[62,191],[66,196],[67,201],[68,177],[70,168],[71,179],[73,199],[74,140],[76,137],[113,228],[136,193],[138,209],[148,194]]},{"d":17,"u":122,"c":54,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[106,189],[110,186],[120,185],[122,176],[129,222],[154,223],[115,203],[133,184],[134,198],[135,205],[113,242],[128,241],[138,244],[144,243],[89,212],[102,214],[101,225],[103,238],[163,209],[165,245],[153,228],[159,240],[168,239],[61,199],[64,148],[66,196],[118,200],[125,204],[83,215],[130,231],[141,237],[127,182],[63,160],[155,207],[79,190],[100,227],[109,226],[132,221],[88,210],[96,216],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[94,181],[77,162],[80,211],[93,161],[95,167],[116,175],[123,230],[108,218],[107,232],[126,229],[131,233],[143,234],[87,164],[91,224],[121,236],[136,193],[140,201],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,38],[12,40],[13,42],[14,44],[15,46],[16,48],[17,50],[19,53],[21,56],[23,59],[25,62],[27,65],[29,68],[31,71],[33,74],[35,78],[37,81],[39,97],[41,146],[43,171],[45,90],[47,173],[49,158],[51,99],[52,170],[55,145],[57,157],[58,114],[60,194],[67,183],[69,177],[70,191],[72,208],[73,187],[75,169],[76,195],[82,180],[85,147],[86,152],[92,178],[98,235],[137,179]]},{"d":17,"u":126,"c":56,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[89,169],[90,180],[92,178],[120,185],[122,176],[129,222],[154,223],[115,203],[133,184],[134,198],[135,205],[113,242],[128,241],[138,244],[144,243],[91,212],[97,236],[110,194],[140,249],[102,214],[101,225],[103,238],[136,193],[152,246],[153,228],[159,240],[168,239],[121,247],[137,252],[145,250],[146,208],[195,251],[125,204],[83,215],[130,231],[141,237],[127,182],[63,160],[155,207],[79,190],[100,227],[109,226],[87,201],[98,235],[163,245],[114,248],[187,253],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[94,181],[77,162],[80,211],[93,161],[95,167],[116,175],[123,230],[108,218],[107,232],[126,229],[131,233],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,38],[12,40],[13,42],[14,44],[15,46],[16,48],[17,50],[19,53],[21,57],[23,58],[25,62],[27,65],[29,68],[31,71],[33,74],[35,78],[37,81],[39,85],[41,86],[43,132],[45,106],[47,170],[49,177],[51,173],[52,171],[54,96],[55,191],[59,200],[60,143],[61,179],[64,164],[66,186],[67,165],[69,199],[70,147],[72,210],[73,189],[75,183],[76,216],[82,224],[88,221],[99,157],[118,209],[148,196],[158,234]]},{"d":17,"u":130,"c":58,"pairs":[[124,219],[111,174],[112,172],[119,192],[105,197],[127,173],[155,256],[183,231],[120,185],[122,176],[129,222],[154,223],[115,203],[133,184],[134,198],[135,205],[113,242],[128,241],[138,244],[144,243],[91,212],[97,236],[110,194],[140,249],[102,214],[101,225],[103,238],[136,193],[152,246],[153,228],[159,240],[168,239],[121,247],[137,252],[145,250],[146,208],[195,251],[125,204],[118,254],[148,224],[157,257],[164,260],[132,255],[143,261],[160,237],[100,227],[109,226],[87,201],[98,235],[163,245],[114,248],[187,253],[117,166],[142,220],[149,202],[84,188],[104,151],[139,213],[150,217],[156,206],[81,189],[82,171],[85,182],[88,199],[89,169],[90,234],[92,178],[96,179],[116,175],[123,230],[108,218],[1,18],[2,20],[3,22],[4,24],[5,26],[6,28],[7,30],[8,32],[9,34],[10,36],[11,38],[12,40],[13,42],[14,44],[15,46],[16,48],[17,50],[19,53],[21,56],[23,59],[25,62],[27,65],[29,68],[31,71],[33,74],[35,77],[37,80],[39,83],[41,86],[43,95],[45,106],[47,177],[49,165],[51,170],[52,180],[54,200],[55,158],[57,147],[60,162],[61,186],[63,161],[64,196],[66,207],[67,209],[69,141],[70,190],[72,215],[73,131],[75,130],[76,221],[78,216],[79,210],[93,233],[94,181],[99,232],[107,229],[126,211],[167,258],[191,259]]},{"d":33,"u":70,"c":20,"pairs":[[38,81],[44,131],[45,135],[50,96],[52,92],[54,116],[32,95],[33,114],[35,117],[47,130],[55,132],[57,136],[51,124],[18,68],[19,70],[63,98],[65,120],[13,58],[56,110],[53,94],[15,99],[16,101],[17,105],[48,137],[14,106],[21,87],[22,83],[26,91],[27,118],[30,97],[31,90],[37,107],[41,109],[43,80],[46,85],[60,113],[77,115],[59,134],[61,139],[28,86],[64,133],[72,119],[73,121],[74,123],[67,111],[69,126],[1,34],[2,62],[3,89],[4,84],[5,100],[6,102],[7,108],[8,79],[9,103],[10,82],[11,104],[12,112],[23,75],[24,88],[25,122],[29,128],[36,78],[39,141],[40,138],[42,76],[49,125],[66,140],[71,127],[93,129]]},{"d":33,"u":74,"c":22,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[55,141],[13,90],[14,89],[19,116],[72,131],[77,139],[83,144],[84,138],[91,134],[25,62],[44,112],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[17,80],[21,93],[26,110],[61,97],[64,145],[69,118],[28,123],[32,71],[48,137],[36,129],[42,100],[73,147],[76,149],[78,148],[81,119],[41,128],[43,114],[10,111],[11,66],[40,86],[47,146],[1,34],[2,87],[3,99],[4,102],[5,96],[6,88],[7,52],[8,98],[9,115],[12,92],[15,49],[16,95],[18,70],[20,124],[23,101],[24,74],[27,94],[29,82],[30,132],[37,79],[50,142],[57,140],[75,126],[85,120]]},{"d":33,"u":78,"c":24,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[55,141],[61,97],[64,145],[19,116],[72,131],[77,139],[83,144],[84,138],[91,134],[57,96],[85,152],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[17,80],[21,93],[26,110],[40,74],[47,155],[69,118],[28,123],[49,156],[66,157],[36,129],[42,100],[73,147],[76,149],[78,148],[81,119],[41,128],[43,114],[10,111],[52,154],[70,153],[16,101],[27,137],[11,115],[12,102],[30,126],[1,34],[2,37],[3,48],[4,79],[5,82],[6,86],[7,89],[8,50],[9,98],[13,112],[14,92],[15,94],[18,71],[20,88],[22,120],[23,132],[25,62],[29,75],[32,124],[44,150],[87,142],[90,140],[95,146],[99,151]]},{"d":33,"u":82,"c":26,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[55,141],[17,101],[18,124],[64,145],[19,116],[72,131],[77,139],[83,144],[84,138],[91,134],[29,142],[73,158],[85,152],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[93,165],[22,120],[15,126],[16,115],[32,146],[47,155],[69,118],[28,123],[49,156],[66,157],[36,129],[42,100],[95,150],[75,164],[79,159],[44,148],[81,119],[41,128],[43,114],[86,161],[88,151],[90,160],[94,147],[23,132],[70,153],[1,34],[2,37],[3,40],[4,96],[5,82],[6,48],[7,89],[8,87],[9,111],[10,78],[11,57],[12,102],[13,52],[14,110],[20,71],[21,99],[24,74],[25,98],[27,61],[30,140],[50,162],[62,163],[76,112],[80,154],[92,137],[97,149]]},{"d":33,"u":86,"c":28,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[61,171],[82,172],[18,124],[64,145],[19,116],[72,131],[77,139],[83,144],[84,138],[91,134],[29,142],[73,158],[85,152],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[93,165],[22,120],[71,173],[74,169],[32,146],[47,155],[69,118],[49,156],[66,157],[36,129],[42,100],[95,150],[75,164],[79,159],[44,148],[81,119],[41,128],[43,114],[86,161],[88,151],[90,160],[78,170],[89,166],[70,153],[94,167],[102,154],[27,80],[30,147],[1,34],[2,37],[3,40],[4,50],[5,101],[6,57],[7,52],[8,76],[9,110],[10,92],[11,97],[12,111],[13,87],[14,123],[15,99],[16,55],[17,96],[20,98],[21,132],[23,141],[24,140],[25,137],[26,62],[48,163],[112,162],[115,149],[126,168]]},{"d":33,"u":90,"c":30,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[61,171],[82,172],[18,124],[64,145],[16,115],[17,132],[77,139],[83,144],[84,138],[91,134],[29,142],[73,158],[85,152],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[93,165],[22,120],[71,173],[74,169],[32,146],[47,155],[81,177],[23,101],[66,157],[36,129],[42,100],[95,150],[75,164],[79,159],[69,176],[96,175],[41,128],[43,114],[86,161],[88,151],[90,160],[78,170],[89,166],[70,153],[94,167],[26,148],[76,180],[1,34],[2,37],[3,40],[4,49],[5,44],[6,48],[7,116],[8,57],[9,62],[10,111],[11,123],[12,98],[13,131],[14,50],[15,112],[19,87],[20,137],[21,72],[24,140],[25,99],[27,147],[28,149],[52,163],[55,174],[80,162],[92,126],[97,181],[102,154],[110,156],[118,168],[119,178],[141,179]]},{"d":33,"u":94,"c":32,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[61,171],[82,172],[18,124],[64,145],[102,186],[114,167],[77,139],[83,144],[99,178],[30,154],[36,129],[29,142],[73,158],[85,152],[45,133],[46,106],[53,122],[58,105],[59,103],[67,107],[68,109],[93,165],[110,156],[71,173],[74,169],[47,155],[81,177],[116,168],[87,184],[91,182],[42,100],[95,150],[80,181],[92,163],[79,159],[69,176],[111,162],[112,146],[96,183],[98,157],[86,161],[88,151],[90,160],[78,170],[89,166],[70,153],[101,179],[76,185],[119,187],[27,147],[1,34],[2,37],[3,40],[4,43],[5,41],[6,44],[7,49],[8,57],[9,52],[10,84],[11,115],[12,123],[13,131],[14,126],[15,97],[16,132],[17,62],[19,138],[20,118],[21,120],[22,72],[23,137],[24,141],[25,140],[26,148],[28,149],[48,174],[50,175],[55,128],[66,189],[75,164],[94,180],[134,188]]},{"d":33,"u":98,"c":34,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[61,171],[82,172],[97,195],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[30,154],[132,190],[148,197],[73,158],[85,152],[45,133],[46,106],[53,122],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[67,185],[111,189],[18,138],[116,168],[32,160],[47,155],[81,177],[23,115],[87,184],[94,193],[19,134],[107,188],[80,181],[92,163],[79,159],[69,176],[15,124],[112,146],[96,183],[98,157],[86,161],[88,151],[71,173],[72,191],[70,153],[50,180],[120,174],[123,156],[75,170],[76,187],[91,182],[1,36],[2,40],[3,42],[4,41],[5,48],[6,52],[7,43],[8,59],[9,49],[10,55],[11,128],[12,141],[13,140],[14,64],[16,84],[17,131],[20,142],[21,103],[22,126],[24,147],[25,95],[26,119],[27,100],[28,149],[29,118],[37,162],[44,150],[57,169],[62,175],[74,129],[90,164],[101,145],[137,179]]},{"d":33,"u":102,"c":36,"pairs":[[39,104],[51,117],[38,143],[54,130],[56,113],[60,108],[63,127],[65,121],[31,12)scd";
    r += R"scd(5],[33,136],[35,135],[61,171],[82,172],[97,195],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[30,154],[132,190],[148,197],[95,150],[115,183],[45,133],[46,106],[53,122],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[67,185],[111,189],[34,168],[62,147],[32,160],[47,155],[100,204],[119,201],[87,184],[94,193],[19,134],[107,188],[81,177],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[27,158],[28,141],[88,151],[71,173],[72,191],[70,153],[50,180],[120,174],[123,156],[75,170],[76,187],[91,182],[98,157],[112,164],[96,163],[86,179],[116,161],[1,37],[2,40],[3,42],[4,41],[5,48],[6,118],[7,49],[8,52],[9,44],[10,142],[11,131],[12,137],[13,59],[14,64],[15,55],[16,103],[17,92],[18,124],[20,90],[21,128],[22,145],[23,74],[24,146],[25,152],[26,140],[29,138],[43,176],[57,149],[69,198],[73,162],[129,200],[169,203]]},{"d":33,"u":106,"c":38,"pairs":[[39,104],[51,117],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[61,171],[82,172],[97,195],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[30,154],[132,190],[148,197],[95,150],[115,183],[116,209],[23,152],[24,131],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[67,185],[111,189],[34,168],[62,147],[32,160],[47,155],[100,204],[119,201],[87,184],[94,193],[19,134],[107,188],[81,177],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[27,158],[28,141],[88,151],[71,173],[72,191],[70,153],[50,180],[120,174],[123,156],[96,210],[103,208],[128,203],[91,182],[98,157],[112,164],[129,179],[142,213],[133,200],[1,36],[2,40],[3,37],[4,41],[5,44],[6,42],[7,49],[8,48],[9,52],[10,55],[11,57],[12,124],[13,64],[14,146],[15,140],[16,122],[17,86],[18,106],[20,90],[21,143],[22,149],[25,145],[26,161],[29,73],[43,176],[45,137],[46,169],[53,162],[59,170],[69,206],[74,212],[75,211],[76,163],[92,187],[118,207],[138,198]]},{"d":33,"u":110,"c":40,"pairs":[[39,104],[51,117],[54,130],[56,113],[60,108],[63,127],[65,121],[31,125],[33,136],[35,135],[27,168],[28,162],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[44,176],[132,190],[48,155],[49,140],[74,216],[115,183],[116,209],[148,207],[122,211],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[34,147],[42,150],[133,200],[95,220],[98,221],[145,187],[69,161],[100,204],[119,201],[87,184],[94,193],[19,134],[107,188],[81,177],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[88,151],[71,173],[72,191],[70,153],[50,180],[120,174],[123,156],[59,154],[118,206],[143,214],[103,208],[128,203],[131,218],[146,215],[112,164],[129,179],[1,36],[2,38],[3,37],[4,41],[5,43],[6,45],[7,47],[8,52],[9,55],[10,53],[11,96],[12,90],[13,137],[14,124],[15,64],[16,106],[17,62],[18,138],[20,149],[21,91],[22,157],[23,141],[24,75],[25,158],[26,163],[30,169],[32,170],[46,182],[57,171],[61,172],[67,189],[73,213],[76,185],[82,210],[86,198],[97,195],[111,217],[152,212]]},{"d":33,"u":114,"c":42,"pairs":[[25,149],[26,163],[27,168],[56,113],[60,108],[63,127],[65,121],[132,223],[138,228],[97,226],[111,217],[28,162],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[44,176],[117,195],[124,189],[129,229],[36,169],[38,158],[47,182],[148,207],[122,211],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[34,147],[133,200],[95,220],[98,221],[145,187],[69,161],[100,204],[119,201],[87,184],[94,193],[19,134],[107,188],[81,177],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[88,151],[71,173],[106,216],[115,227],[91,210],[96,224],[120,174],[123,156],[73,209],[104,154],[116,225],[137,222],[143,214],[103,208],[128,203],[131,218],[146,215],[1,35],[2,37],[3,39],[4,41],[5,43],[6,45],[7,50],[8,48],[9,53],[10,55],[11,57],[12,61],[13,64],[14,72],[15,67],[16,130],[17,112],[18,140],[20,86],[21,164],[22,90],[23,141],[24,118],[30,172],[31,171],[32,125],[33,179],[40,170],[46,191],[49,157],[51,190],[52,155],[54,198],[59,135],[62,150],[70,153],[74,185],[75,213],[76,183],[82,180],[136,206],[152,212]]},{"d":33,"u":118,"c":44,"pairs":[[25,149],[26,163],[27,168],[56,113],[60,108],[63,127],[65,121],[132,223],[138,228],[97,226],[111,217],[28,162],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[36,169],[38,158],[47,182],[148,207],[122,211],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[34,147],[133,200],[95,220],[98,221],[145,187],[69,161],[100,204],[119,201],[87,184],[94,193],[19,134],[107,188],[81,177],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[88,151],[71,173],[106,216],[115,227],[91,210],[96,224],[75,213],[76,212],[123,156],[171,237],[104,154],[116,225],[137,222],[143,214],[103,208],[128,203],[131,218],[125,232],[136,234],[140,233],[118,206],[141,236],[1,35],[2,37],[3,39],[4,41],[5,43],[6,45],[7,50],[8,48],[9,53],[10,55],[11,57],[12,61],[13,64],[14,74],[15,73],[16,86],[17,120],[18,72],[20,152],[21,135],[22,90],[23,153],[24,172],[30,174],[31,176],[32,179],[33,155],[40,180],[42,185],[46,157],[49,191],[51,190],[52,198],[54,130],[59,209],[62,170],[67,150],[70,164],[82,231],[112,230],[146,215],[183,235]]},{"d":33,"u":122,"c":46,"pairs":[[25,149],[26,163],[27,168],[56,113],[60,108],[63,127],[65,121],[132,223],[138,228],[91,174],[157,245],[111,217],[28,162],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[36,169],[38,158],[47,182],[148,207],[122,211],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[34,147],[133,200],[95,220],[98,221],[54,206],[59,210],[49,177],[119,201],[87,184],[94,193],[19,134],[97,242],[74,170],[88,190],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[107,188],[135,239],[106,216],[115,227],[75,224],[76,230],[112,234],[118,236],[141,209],[130,241],[155,231],[123,156],[171,237],[104,154],[116,225],[137,222],[143,214],[103,208],[128,203],[131,218],[125,232],[183,243],[96,226],[1,35],[2,37],[3,39],[4,41],[5,43],[6,45],[7,50],[8,48],[9,51],[10,55],[11,57],[12,61],[13,64],[14,72],[15,67],[16,70],[17,153],[18,81],[20,152],[21,150],[22,120],[23,176],[24,172],[30,100],[31,173],[32,151],[33,180],[40,179],[42,86],[44,187],[52,198],[53,191],[62,212],[69,161],[71,215],[73,213],[82,185],[90,204],[136,244],[140,235],[145,238],[146,240],[164,233]]},{"d":33,"u":126,"c":48,"pairs":[[46,204],[60,217],[185,248],[108,251],[137,222],[63,127],[65,121],[132,223],[138,228],[91,174],[157,245],[143,212],[44,183],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[148,207],[122,211],[58,105],[78,194],[89,166],[68,109],[93,165],[66,192],[34,147],[133,200],[136,244],[149,252],[95,220],[98,221],[54,206],[59,210],[49,177],[119,201],[87,184],[94,193],[19,134],[97,242],[74,170],[88,190],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[31,155],[32,164],[33,179],[115,227],[146,238],[112,234],[100,250],[120,213],[118,236],[141,209],[130,241],[73,187],[123,156],[171,237],[104,154],[116,225],[111,253],[151,249],[103,208],[128,203],[131,218],[51,198],[53,173],[1,35],[2,37],[3,39],[4,41],[5,43],[6,45],[7,47],[8,50],[9,52],[10,55],[11,57],[12,56],[13,61],[14,71],[15,64],[16,67],[17,69],[18,72],[20,90],[21,125],[22,82],[23,152],[24,158],[25,180],[26,145],[27,162],[28,161],[30,140],[36,172],[38,182],[40,188],[42,191],[62,215],[70,176],[75,216],[76,232],[96,233],[106,246],[107,214],[135,230],[150,231],[153,247],[163,239],[168,226],[169,240]]},{"d":33,"u":130,"c":50,"pairs":[[49,198],[60,217],[185,248],[108,251],[137,222],[63,127],[65,121],[132,223],[138,228],[91,174],[157,245],[143,212],[44,183],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[148,207],[43,204],[48,201],[52,192],[89,166],[68,109],[93,165],[145,259],[150,256],[156,226],[136,244],[149,252],[95,220],[98,221],[54,206],[59,210],[161,255],[163,258],[87,184],[94,193],[123,257],[97,242],[74,170],[88,190],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[168,239],[173,230],[33,179],[115,227],[146,238],[112,234],[100,250],[120,213],[118,236],[141,209],[130,241],[73,233],[131,218],[140,260],[171,237],[104,154],[116,225],[111,253],[151,249],[103,208],[128,203],[119,200],[125,261],[122,211],[1,34],[2,36],[3,38],[4,40],[5,42],[6,45],[7,47],[8,46],[9,51],[10,53],[11,55],[12,57],[13,61],[14,66],[15,62],[16,67],[17,71],[18,64],[19,134],[20,69],[21,147],[22,82],[23,155],[24,153],[25,135],[26,133],[27,182],[28,187],[30,177],[31,164],[32,90],[35,191],[37,172],[39,176],[41,169],[56,214],[58,162],[70,232],[72,216],[75,188],[76,152],[78,194],[96,215],[105,246],[106,254],[107,231],[158,240],[180,247]]},{"d":33,"u":134,"c":52,"pairs":[[49,198],[60,217],[185,248],[108,251],[137,222],[63,127],[65,121],[132,223],[138,228],[91,174],[157,245],[143,212],[44,183],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[148,207],[43,204],[48,201],[89,166],[68,109],[93,165],[145,259],[150,256],[156,226],[136,244],[149,252],[95,220],[98,221],[54,206],[59,210],[161,255],[163,258],[87,184],[94,193],[123,257],[97,242],[74,170],[88,190],[84,205],[79,159],[80,181],[85,202],[101,175],[126,199],[142,197],[92,219],[168,239],[173,230],[33,179],[115,227],[146,238],[112,234],[100,250],[120,213],[118,236],[141,209],[130,241],[73,233],[153,269],[158,247],[171,237],[104,154],[116,225],[111,253],[151,249],[103,208],[128,203],[119,200],[125,261],[105,268],[107,265],[1,34],[2,36],[3,38],[4,40],[5,42],[6,45],[7,47],[8,46],[9,51],[10,53],[11,55],[12,57],[13,61],[14,66],[15,62],[16,67],[17,71],[18,64],[19,106],[20,69],[21,131],[22,82],[23,90],[24,164],[25,191],[26,133],[27,140],[28,147],[30,177],[31,172],[32,194],[35,155],[37,192],[39,176],[41,169],[50,214],[56,215],[58,182],[70,218],[72,216],[75,240],[76,232],[78,211],[96,231],[122,254],[134,260],[135,264],[152,267],[162,266],[180,262],[187,263],[188,246]]},{"d":33,"u":138,"c":54,"pairs":[[35,176],[43,152],[185,248],[108,251],[137,222],[63,127],[65,121],[132,223],[138,228],[91,174],[157,245],[143,212],[44,183],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[148,207],[177,275],[187,263],[89,166],[68,109],[93,165],[145,259],[150,256],[156,226],[136,244],[149,252],[95,220],[98,221],[59,210],[161,255],[163,258],[87,184],[94,193],[123,257],[76,216],[104,214],[88,190],[84,205],[79,159],[80,181],[56,225],[58,191],[126,199],[142,197],[92,219],[168,239],[173,230],[74,240],[85,246],[97,249],[146,238],[112,234],[100,250],[120,213],[118,236],[141,209],[130,241],[41,211],[96,260],[115,227],[131,266],[37,154],[70,232],[158,274],[73,233],[103,208],[128,203],[119,200],[125,261],[105,268],[107,265],[135,254],[164,277],[155,270],[101,247],[122,218],[111,267],[116,271],[49,206],[20,71],[21,75],[153,242],[1,34],[2,36],[3,38],[4,40],[5,42],[6,45],[7,47],[8,46],[9,51],[10,53],[11,55],[12,57],[13,60],[14,62],[15,61],[16,66],[17,69],[18,67],[19,106],[22,82],[23,151],[24,90],[25,169],[26,171],[27,192],[28,175],[30,134],[31,198],[32,180],[33,201],[39,188],[48,172],[50,179],[52,194],[64,217],[72,231],[78,215],[133,253],[140,272],[147,273],[162,269],[170,237],[182,264],[202,276],[204,262]]},{"d":33,"u":142,"c":56,"pairs":[[28,172],[30,192],[31,198],[185,248],[108,251],[137,222],[63,127],[65,121],[73,242],[78,231],[91,174],[157,245],[143,212],[44,183],[29,160],[110,196],[102,186],[114,167],[77,139],[83,144],[99,178],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[148,207],[177,275],[187,263],[89,166],[68,109],[93,165],[145,259],[150,256],[156,226],[136,244],[149,252],[95,220],[98,221],[59,210],[161,255],[163,258],[87,184],[94,193],[123,257],[76,216],[104,214],[88,190],[84,205],[79,159],[80,181],[58,191],[180,269],[194,281],[92,219],[168,239],[173,230],[74,240],[85,246],[97,249],[146,238],[112,234],[100,250],[120,213],[118,236],[141,209],[130,241],[103,262],[132,280],[115,227],[131,266],[153,285],[171,278],[179,253],[158,274],[147,284],[175,279],[128,203],[119,200],[125,261],[105,268],[107,265],[135,254],[164,277],[199,272],[215,273],[122,218],[111,267],[96,260],[101,247],[133,282],[134,276],[48,208],[1,34],[2,36],[3,38],[4,40],[5,42],[6,45],[7,47],[8,46],[9,51],[10,53],[11,55],[12,57],[13,60],[14,62],[15,61],[16,66],[17,69],[18,67],[19,70],[20,75],[21,126],[22,82],[23,152],[24,90],[25,182],[26,154],[27,197],[32,206],[33,142],[35,176],[37,202],[39,211],[41,188],[43,169],[49,204],[50,223],[52,106],[54,225],[64,232],[71,162],[72,217],[116,233],[138,228],[140,264],[151,271],[155,270],[170,237],[201,283]]},{"d":33,"u":146,"c":58,"pairs":[[155,237],[185,248],[108,251],[64,234],[71,215],[65,121],[73,242],[78,231],[91,174],[157,245],[143,212],[29,160],[87,260],[112,238],[114,167],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[86,224],[113,243],[151,246],[177,275],[187,263],[89,166],[68,109],[93,165],[193,282],[204,271],[156,226],[136,244],[149,252],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[76,216],[104,214],[88,190],[84,205],[79,159],[80,181],[194,281],[92,219],[168,239],[173,230],[74,240],[83,180],[99,276],[49,223],[144,286],[100,250],[120,213],[118,236],[141,209],[130,241],[103,262],[56,201],[115,227],[131,266],[153,285],[171,278],[179,253],[158,274],[147,284],[175,279],[128,203],[119,200],[125,261],[105,268],[107,265],[135,254],[145,259],[146,270],[150,256],[134,249],[111,267],[182,291],[101,247],[97,273],[116,178],[132,280],[133,288],[39,211],[102,277],[110,232],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,51],[10,53],[11,55],[12,57],[13,60],[14,62],[15,61],[16,66],[17,69],[18,67],[19,70],[20,75],[21,82],[22,106],[23,77],[24,90],[25,85],[26,122],[27,140],[28,169],[30,192],[31,183],[32,196],[33,172],[35,202],[37,208],[41,161],[43,176],[45,162],[47,207],[50,228],[52,217],[54,148],[63,191],[72,233],[127,206],[137,222],[154,218],[163,292],[164,255],[170,269],[186,272],[188,293],[198,290],[199,258]]},{"d":33,"u":150,"c":60,"pairs":[[185,248],[193,282],[64,234],[71,215],[65,121],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[112,238],[114,167],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[86,224],[155,249],[163,276],[162,297],[187,263],[89,166],[68,109],[93,165],[54,236],[76,188],[156,226],[136,244],[149,252],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[169,271],[77,255],[131,295],[84,205],[79,159],[150,232],[154,293],[168,239],[173,230],[74,240],[111,267],[122,237],[172,301],[144,286],[100,250],[25,104],[26,118],[141,209],[130,241],[103,262],[56,201],[127,186],[137,299],[153,285],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[119,200],[125,261],[105,268],[107,265],[135,254],[32,211],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[116,178],[132,280],[133,288],[115,275],[151,246],[30,140],[31,145],[191,296],[212,298],[213,277],[102,222],[177,294],[52,233],[58,198],[157,245],[164,292],[170,269],[175,279],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,51],[10,53],[11,55],[12,57],[13,61],[14,63],[15,62],[16,66],[17,69],[18,72],[19,70],[23,92],[24,90],[27,120],[28,180],[35,196],[37,202],[39,214],[41,208],[43,223],[45,217],[50,227],[80,176],[83,216],[85,146],[88,194],[110,228],[113,243],[128,219],[134,256],[143,270],[148,272],[161,258],[181,266],[192,259],[199,300],[203,290],[206,281]]},{"d":33,"u":154,"c":62,"pairs":[[185,248],[193,282],[64,234],[71,215],[65,121],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[112,238],[114,167],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[86,224],[155,249],[163,276],[162,297],[187,263],[89,166],[68,109],[93,165],[54,236],[181,303],[156,226],[136,244],[149,252],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[148,223],[79,159],[150,232],[154,293],[168,239],[173,230],[74,240],[111,267],[122,237],[172,301],[144,286],[100,250],[25,104],[26,118],[141,209],[130,241],[103,262],[175,302],[127,186],[137,299],[153,285],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[119,200],[125,261],[105,268],[107,265],[135,254],[32,211],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[116,178],[132,280],[133,288],[115,275],[151,246],[30,140],[31,145],[191,296],[212,298],[213,277],[102,222],[177,294],[52,233],[58,198],[157,245],[164,292],[194,281],[199,290],[88,272],[192,258],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,51],[10,53],[11,55],[12,57],[13,60],[14,63],[15,66],[16,70],[17,69],[18,170],[19,80],[23,92],[24,188],[27,128],[28,214],[35,131],[37,202],[39,143],[41,216],[43,110],[45,217],[50,227],[56,180],[61,228],[72,120],[76,256],[83,266],[84,205],[85,270],[90,208],[113,243],[134,295],[161,306],[176,269],[196,308],[201,307],[203,300],[206,305],[219,304],[259,309]]},{"d":33,"u":158,"c":64,"pairs":[[185,248],[193,282],[76,188],[65,121],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[137,299],[153,305],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[89,166],[68,109],[93,165],[54,236],[181,303],[156,226],[136,244],[143,308],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[128,312],[79,159],[150,232],[154,293],[168,239],[173,230],[74,240],[111,267],[122,237],[172,301],[144,286],[100,250],[25,104],[26,118],[141,209],[130,241],[103,262],[175,302],[127,186],[131,314],[134,311],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[119,200],[125,261],[105,268],[107,265],[135,254],[32,211],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[116,178],[132,280],[133,288],[115,275],[151,246],[30,140],[31,145],[191,296],[212,298],[213,277],[102,222],[177,294],[52,233],[58,198],[37,217],[164,292],[194,281],[199,290],[196,317],[192,258],[201,270],[114,304],[113,285],[61,167],[85,272],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,51],[10,53],[11,55],[12,57],[13,60],[14,62],[15,66],[16,69],[17,71],[18,203],[19,149],[23,72],[24,112],[27,88],[28,80],[35,180],[39,227],[41,205],[43,161],[45,206],[50,176],[56,157],[63,252],[70,214],[84,259],[86,256],[90,228],[92,224],[110,234],[120,223],[148,315],[170,266],[202,306],[208,307],[215,300],[216,309],[219,316],[238,313],[243,310],[245,295]]},{"d":33,"u":162,"c":66,"pairs":[[185,248],[193,282],[164,292],[176,321],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[137,299],[153,305],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[89,166],[68,109],[93,165],[54,236],[181,303],[156,226],[136,244],[143,308],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[128,312],[110,214],[141,209],[154,293],[168,239],[173,230],[74,240],[111,267],[122,237],[172,301],[144,286],[100,250],[25,104],[116,178],[132,280],[130,241],[103,262],[175,302],[127,186],[131,314],[134,311],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[149,316],[125,261],[105,268],[107,265],[135,254],[32,211],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[119,245],[161,322],[133,288],[115,275],[151,246],[30,140],[31,145],[191,296],[212,298],[213,277],[102,222],[177,294],[52,233],[58,198],[37,217],[196,317],[56,180],[61,148],[234,315],[192,258],[201,270],[114,304],[113,285],[208,307],[216,313],[85,272],[112,200],[118,310],[205,323],[223,324],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,51],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,69],[17,84],[18,70],[19,80],[23,79],[24,188],[26,76],[27,157],[28,203],[35,167],[39,90],[41,121],[43,228],[45,238],[50,194],[63,159],[65,256],[71,259],[72,266],[86,224],[88,170],[92,281],[120,232],[150,320],[199,290],[202,295],[206,309],[215,300],[219,325],[227,319],[243,318],[252,306]]},{"d":33,"u":166,"c":68,"pairs":[[256,331],[193,282],[164,292],[92,211],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[137,299],[153,305],[94,184],[126,283],[142,289],[117,195],[124,189],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[89,166],[93,165],[54,236],[181,303],[156,226],[136,244],[115,310],[95,220],[98,221],[59,210],[139,197],[152,225],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[228,295],[110,214],[141,209],[154,293],[168,239],[173,230],[176,321],[111,267],[122,237],[172,301],[144,286],[100,250],[25,104],[116,178],[132,280],[130,241],[103,262],[175,302],[127,186],[63,238],[134,311],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[149,316],[125,261],[105,268],[107,265],[150,320],[167,288],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[119,245],[161,322],[215,327],[227,318],[151,246],[30,140],[203,333],[206,309],[212,298],[213,277],[159,252],[177,294],[52,233],[58,198],[121,319],[145,330],[56,180],[61,148],[234,315],[192,258],[201,270],[114,304],[113,285],[208,307],[216,313],[219,325],[223,324],[224,306],[191,329],[194,326],[79,199],[31,85],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,69],[18,71],[19,70],[23,84],[24,80],[26,118],[27,90],[28,222],[32,74],[35,120],[37,217],[39,232],[41,196],[43,240],[45,205],[51,243],[65,170],[72,259],[76,272],[86,200],[88,254],[102,266],[109,300],[112,296],[128,317],[131,314],[133,312],[135,323],[143,308],[157,275],[185,281],[188,332],[202,290],[248,328]]},{"d":33,"u":170,"c":70,"pairs":[[256,331],[193,282],[164,292],[92,211],[73,242],[78,231],[91,174],[20,75],[21,67],[22,82],[29,160],[87,260],[137,299],[153,305],[94,184],[126,283],[142,289],[157,341],[166,338],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[135,335],[93,165],[54,236],[181,303],[156,226],[136,244],[115,310],[95,220],[98,221],[59,210],[139,197],[113,205],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[228,295],[110,214],[141,209],[154,293],[168,239],[173,230],[176,321],[111,267],[122,237],[172,301],[144,286],[100,250],[23,65],[116,178],[132,280],[130,241],[103,262],[175,302],[127,186],[63,238],[134,311],[171,278],[179,253],[158,274],[147,284],[47,218],[49,190],[149,316],[125,261],[105,268],[107,265],[150,320],[167,288],[33,207],[99,183],[106,204],[108,251],[182,291],[101,247],[97,273],[119,245],[161,322],[215,327],[227,318],[151,246],[30,140],[203,333],[206,309],[212,298],[213,277],[159,252],[177,294],[52,233],[58,198],[121,319],[145,330],[56,180],[61,148],[234,315],[192,258],[201,270],[114,304],[31,85],[208,307],[216,313],[219,325],[223,324],[224,306],[191,329],[194,326],[79,199],[128,317],[131,323],[196,314],[133,334],[39,118],[188,332],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,74],[19,202],[24,217],[25,189],[26,89],[27,88],[28,80],[32,112],[35,222],[37,90],[41,243],[43,120],[45,225],[51,124],[69,248],[71,185],[72,266],[76,272],[84,281],[86,285],[102,290],[104,259],[109,300],[117,195],[143,308],[152,312],[170,336],[200,296],[232,337],[240,328],[254,339],[275,340]]},{"d":33,"u":174,"c":72,"pairs":[[170,349],[204,322],[212,298],[225,339],[234,315],[290,344],[254,331],[112,314],[118,200],[124,215],[73,242],[78,231],[91,174],[20,75],[120,313],[164,292],[29,160],[143,340],[266,346],[153,305],[94,184],[126,283],[142,289],[137,299],[166,338],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[99,183],[93,165],[54,236],[181,303],[156,226],[136,244],[217,312],[95,220],[98,221],[59,210],[114,304],[113,205],[96,264],[138,287],[123,257],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[87,213],[122,237],[172,301],[144,286],[193,282],[23,65],[116,178],[132,280],[130,241],[103,262],[175,302],[127,186],[63,238],[134,311],[171,278],[179,253],[158,274],[147,284],[188,348],[49,190],[149,316],[151,347],[152,343],[107,265],[150,320],[167,288],[33,207],[110,214],[92,211],[108,251],[182,291],[101,247],[97,273],[69,268],[37,240],[41,196],[43,243],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[76,281],[121,319],[145,330],[56,180],[61,148],[31,232],[32,197],[201,270],[74,218],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[79,199],[104,310],[131,323],[141,336],[21,67],[125,223],[128,317],[135,308],[140,306],[161,324],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,119],[19,80],[22,216],[24,90],[25,209],[26,230],[27,85],[28,106],[30,82],[35,88],[45,102],[70,133],[89,272],[100,256],[111,176],[117,227],[157,328],[168,224],[173,258],[185,321],[192,337],[195,300],[222,334],[239,318],[260,335],[261,332],[267,327],[277,341]]},{"d":33,"u":178,"c":74,"pairs":[[170,349],[204,322],[212,298],[225,339],[234,315],[290,344],[111,318],[112,314],[118,200],[124,215],[73,242],[78,231],[91,174],[20,75],[120,313],[164,292],[29,160],[143,340],[266,346],[153,305],[94,184],[126,283],[142,289],[137,299],[166,338],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[99,183],[93,165],[54,236],[181,303],[156,226],[136,244],[217,312],[95,220],[98,221],[59,210],[114,304],[113,205],[96,264],[117,321],[119,328],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[133,316],[149,254],[172,301],[144,286],[193,282],[23,65],[116,178],[132,280],[130,241],[261,332],[267,352],[127,186],[63,238],[134,311],[171,278],[179,253],[158,274],[147,284],[188,348],[49,190],[151,347],[152,343],[107,265],[150,320],[167,288],[33,207],[110,214],[92,211],[108,251],[182,291],[101,247],[97,273],[69,268],[37,240],[41,196],[43,243],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[76,281],[121,319],[145,330],[56,180],[61,148],[31,232],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[79,199],[104,310],[131,323],[141,336],[21,67],[125,223],[128,317],[135,308],[140,306],[161,227],[168,327],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,70],[19,72],[22,80],[24,173],[25,89],[26,82],[27,87],[28,222],[30,175],[35,100],[45,106],[85,195],[88,272],[90,300],[102,258],[103,230],[122,237],[123,331],[138,213],[157,324],[176,302],[185,356],[192,355],[209,353],[216,350],[218,354],[224,287],[239,351],[256,357],[257,335],[260,337],[262,341],[277,334]]},{"d":33,"u":182,"c":76,"pairs":[[170,349],[204,322],[212,298],[225,339],[234,315],[290,344],[111,318],[112,314],[118,200],[124,215],[73,242],[78,231],[91,174],[20,75],[120,313],[164,292],[29,160],[143,340],[266,346],[153,305],[94,184],[126,283],[142,289],[137,299],[166,338],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[260,324],[278,353],[54,236],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[114,304],[113,205],[96,264],[117,321],[119,328],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[133,316],[149,254],[172,301],[144,286],[193,282],[23,65],[116,178],[132,280],[130,241],[261,332],[267,352],[127,186],[63,238],[134,311],[123,331],[157,362],[158,274],[147,284],[188,348],[49,190],[151,347],[152,343],[107,265],[150,320],[167,288],[33,207],[110,214],[92,211],[108,251],[182,291],[101,247],[97,273],[69,268],[37,240],[41,196],[43,243],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[121,319],[145,330],[56,180],[61,148],[31,232],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[79,199],[104,310],[131,323],[141,336],[21,67],[125,223],[128,317],[135,308],[140,306],[213,357],[216,272],[218,363],[161,355],[168,327],[173,239],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,70],[19,72],[22,80],[24,85],[25,82],[26,89],[27,237],[28,102],[30,179],[35,100],[45,256],[74,175],[87,171],[88,224],[90,257],[93,165],[99,176],[103,287],[106,277],[122,334],[136,350],[138,351],[183,262],[185,341],[192,302],[195,358],[209,335],[222,337],[230,364],[244,356],[253,361],[258,365],[281,359],[300,360]]},{"d":33,"u":186,"c":78,"pairs":[[170,349],[204,322],[212,298],[225,339],[234,315],[290,344],[111,318],[112,314],[118,200],[124,215],[73,242],[91,174],[20,75],[120,313],[164,292],[29,160],[143,340],[266,346],[165,277],[179,258],[185,369],[195,366],[142,289],[137,299],[166,338],[129,229],[81,235],[83,269],[155,249],[163,276],[162,297],[187,263],[260,324],[278,353],[54,236],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[114,304],[113,205],[96,264],[117,321],[119,328],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[133,316],[149,254],[172,301],[144,286],[193,282],[153,370],[192,359],[209,361],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[157,362],[158,274],[147,284],[103,175],[106,171],[49,190],[110,188],[152,343],[107,265],[150,320],[167,288],[33,207],[281,371],[287,364],[108,251],[182,291],[101,247],[97,273],[69,268],[37,240],[41,196],[43,243],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[121,319],[145,330],[56,180],[61,148],[31,232],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[79,199],[104,310],[131,323],[141,336],[231,350],[237,373],[257,365],[262,372],[230,331],[302,358],[213,357],[173,239],[178,341],[161,355],[116,223],[122,334],[125,335],[132,280],[151,347],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[11,55],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,70],[22,80],[23,138],[24,85],[25,99],[26,183],[27,89],[28,184],[30,128],[35,224],[45,218],[67,244],[72,176],[76,136],[82,216],[87,300],[88,214],[90,256],[92,134],[93,311],[94,308],[100,253],[102,317],[123,283],[126,337],[135,351],[140,348],[168,327],[211,360],[222,367],[272,356],[305,368],[306,363]]},{"d":33,"u":190,"c":80,"pairs":[[28,126],[204,322],[212,298],[225,339],[234,315],[290,344],[306,363],[112,314],[118,200],[124,215],[73,242],[91,174],[20,75],[120,313],[164,292],[29,160],[92,176],[266,346],[165,277],[179,258],[185,369],[195,366],[142,289],[137,299],[166,338],[155,367],[157,376],[114,334],[117,321],[119,337],[122,327],[187,263],[260,324],[278,353],[54,236],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[25,67],[149,254],[123,272],[144,286],[193,282],[153,370],[192,359],[209,361],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[158,274],[147,284],[103,175],[106,171],[49,190],[110,188],[152,343],[107,265],[150,320],[167,288],[33,207],[281,371],[287,364],[108,251],[182,291],[101,247],[97,273],[69,268],[37,240],[41,196],[43,243],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[121,319],[145,330],[56,180],[61,148],[31,232],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[229,374],[253,379],[131,323],[141,336],[231,350],[237,373],[257,365],[262,372],[230,331],[302,358],[213,357],[173,239],[178,341],[161,355],[116,223],[23,85],[125,335],[132,280],[151,347],[184,381],[211,368],[216,375],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,57],[13,60],[14,62],[15,64],[16,66],[17,68],[18,70],[22,82],[24,87],[26,100],[27,88],[30,143],[35,135],[45,222],[72,283],[76,170],[79,199],[83,218],[89,311],[90,269],[93,276],[94,308],[99,305],[102,310],[104,317],[111,297],[128,349],[129,318],[133,340],[134,249],[136,351],[138,328],[140,300],[162,378],[163,316],[168,377],[172,301],[183,356],[214,348],[224,380],[304,362]]},{"d":33,"u":194,"c":82,"pairs":[[31,151],[33,162],[35,129],[234,315],[290,344],[306,363],[112,314],[118,200],[124,215],[73,242],[91,174],[20,75],[120,313],[164,292],[29,160],[92,176],[266,346],[165,277],[15,64],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[104,304],[133,316],[122,327],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[169,271],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[84,245],[86,250],[25,67],[149,254],[123,272],[144,286],[193,282],[93,311],[192,359],[209,361],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[138,349],[147,284],[103,175],[106,171],[49,190],[110,188],[152,343],[107,265],[150,320],[167,288],[276,389],[281,371],[287,364],[153,301],[157,376],[170,387],[172,375],[183,369],[184,380],[213,366],[283,383],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[99,321],[102,317],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[194,326],[229,374],[253,379],[131,323],[141,336],[231,350],[237,373],[257,365],[262,372],[230,331],[302,358],[111,308],[173,239],[178,341],[161,355],[116,223],[23,85],[218,378],[224,322],[232,348],[27,88],[28,114],[30,207],[37,222],[199,388],[145,370],[163,298],[211,385],[212,330],[185,300],[135,249],[136,337],[140,356],[168,382],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,57],[13,76],[14,62],[22,80],[24,179],[26,182],[41,225],[43,117],[45,204],[54,236],[60,258],[69,273],[72,216],[83,289],[87,196],[90,297],[97,268],[100,247],[101,280],[108,251],[119,328],[121,347],[125,335],[126,339],[128,351],[132,340],[134,291],[142,362],[143,319],[158,357],[195,368],[214,274],[240,386],[305,384],[334,381]]},{"d":33,"u":198,"c":84,"pairs":[[57,230],[283,383],[72,151],[234,315],[290,344],[83,240],[90,274],[93,311],[124,215],[73,242],[91,174],[13,60],[120,313],[164,292],[29,160],[92,176],[266,346],[145,343],[152,368],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[142,216],[133,316],[122,327],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[87,297],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[86,250],[119,326],[121,330],[262,382],[144,286],[193,282],[132,291],[192,359],[209,361],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[323,384],[147,284],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[150,320],[167,288],[276,389],[281,371],[287,364],[153,301],[125,304],[170,387],[172,375],[183,369],[129,258],[97,305],[102,317],[108,337],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[99,321],[280,340],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[191,329],[196,395],[229,374],[253,379],[35,117],[185,386],[231,350],[237,373],[257,365],[195,351],[214,390],[302,358],[225,339],[245,391],[178,341],[161,355],[116,223],[23,85],[218,378],[224,322],[232,348],[247,362],[28,114],[30,207],[37,222],[199,388],[254,372],[163,298],[211,385],[140,370],[149,331],[162,366],[158,381],[179,334],[306,363],[143,356],[111,336],[123,319],[126,184],[26,131],[31,141],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[14,69],[15,64],[20,212],[22,165],[24,173],[25,251],[33,134],[41,104],[43,190],[45,272],[49,277],[62,268],[67,169],[75,236],[76,271],[80,128],[82,273],[88,308],[100,194],[112,314],[118,289],[135,335],[138,349],[157,376],[168,300],[182,396],[200,397],[204,357],[239,380],[249,393],[328,394],[347,392]]},{"d":33,"u":202,"c":86,"pairs":[[57,230],[283,383],[72,151],[234,315],[290,344],[83,240],[90,274],[93,311],[124,215],[73,242],[91,174],[13,60],[157,376],[165,397],[29,160],[92,176],[266,346],[145,343],[152,368],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[142,216],[133,316],[122,327],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[95,220],[98,221],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[87,297],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[119,326],[121,330],[262,382],[144,286],[193,282],[132,291],[192,359],[209,361],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[323,384],[147,284],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[150,320],[167,288],[276,389],[281,371],[287,364],[153,301],[125,304],[170,387],[172,375],[183,369],[129,258],[97,305],[102,317],[108,337],[248,345],[202,275],[203,333],[206,309],[39,189],[159,252],[177,294],[52,233],[99,321],[280,340],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[239,400],[250,393],[251,398],[253,379],[35,117],[185,386],[231,350],[237,373],[257,365],[195,351],[214,390],[302,358],[225,339],[245,391],[178,341],[161,355],[116,223],[23,85],[218,378],[224,322],[232,348],[247,362],[33,134],[41,182],[37,222],[199,388],[254,372],[163,298],[211,385],[140,370],[149,331],[162,366],[158,381],[179,334],[306,363],[143,356],[111,336],[123,319],[173,399],[191,329],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[14,62],[15,64],[20,75],[22,88],[24,126],[25,196],[26,84],[28,138],[30,207],[31,76],[43,271],[45,272],[49,112],[67,300],[69,268],[80,212],[82,168],[100,249],[104,335],[114,314],[118,313],[120,273],[128,292],[131,328],[135,349],[141,347],[164,357],[169,403],[184,404],[190,401],[194,396],[200,392],[204,395],[229,374],[236,380],[277,405],[289,394],[308,402]]},{"d":33,"u":206,"c":88,"pairs":[[131,322],[283,383],[72,151],[234,315],[290,344],[57,209],[86,316],[102,196],[124,215],[49,272],[80,313],[13,60],[157,376],[165,397],[29,160],[92,176],[266,346],[145,343],[152,368],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[142,216],[150,387],[153,301],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[161,355],[163,394],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[87,297],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[119,326],[121,330],[262,382],[144,286],[193,282],[132,291],[25,135],[26,112],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[323,384],[147,284],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[287,364],[179,406],[236,413],[242,411],[167,288],[183,369],[129,258],[308,410],[97,305],[100,328],[248,345],[202,275],[91,174],[93,311],[39,189],[159,252],[177,294],[52,233],[99,321],[280,340],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[239,400],[250,393],[251,398],[253,379],[35,117],[185,386],[231,350],[237,373],[257,365],[195,351],[214,390],[302,358],[225,339],[173,407],[184,300],[190,392],[191,402],[23,85],[218,378],[104,249],[271,403],[247,362],[33,134],[41,182],[37,222],[199,388],[254,372],[224,327],[273,401],[73,203],[84,277],[162,366],[69,289],[76,268],[306,363],[143,356],[111,336],[123,319],[141,347],[149,331],[314,380],[349,412],[229,334],[232,381],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[14,62],[15,64],[20,75],[22,168],[24,82],[31,169],[43,178],[45,212],[67,192],[83,298],[90,304],[95,274],[98,221],[108,337],[114,309],[116,333],[118,292],[120,320],[122,348],[125,361],[126,329],[133,240],[138,335],[140,375],[158,341],[164,317],[170,408],[194,399],[200,357],[204,374],[206,405],[207,370],[211,395],[220,391],[223,396],[230,385],[245,409],[359,404]]},{"d":33,"u":210,"c":90,"pairs":[[133,300],[140,337],[143,385],[234,315],[290,344],[57,209],[86,316],[102,196],[124,215],[49,272],[80,313],[13,60],[157,376],[165,397],[29,160],[92,176],[266,346],[145,343],[152,368],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[163,394],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[87,297],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[161,355],[164,381],[262,382],[144,286],[193,282],[132,291],[25,135],[26,112],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[323,384],[147,284],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[287,364],[179,406],[207,421],[211,420],[167,288],[183,369],[129,258],[308,410],[97,305],[100,328],[248,345],[202,275],[91,174],[93,311],[39,189],[236,413],[242,411],[52,233],[88,317],[280,340],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[239,400],[250,393],[251,398],[253,379],[35,117],[185,386],[231,350],[237,373],[257,365],[121,359],[122,335],[302,358],[225,339],[173,407],[125,304],[190,392],[191,402],[23,85],[218,378],[104,249],[271,403],[247,362],[33,134],[41,182],[37,222],[199,388],[254,372],[224,327],[273,401],[73,203],[84,277],[162,366],[69,289],[43,168],[306,363],[116,357],[118,292],[123,319],[141,347],[149,331],[314,380],[349,412],[229,334],[220,419],[221,374],[230,414],[204,361],[240,395],[245,391],[283,418],[309,416],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[14,62],[15,64],[20,75],[22,170],[24,200],[31,131],[45,194],[67,184],[72,298],[76,214],[82,321],[83,274],[95,330],[98,268],[99,192],[108,153],[119,322],[120,320],[126,333],[138,294],[150,387],[151,356],[158,383],[159,399],[169,405],[177,348],[178,341],[195,390],[206,370],[212,404],[232,415],[252,375],[301,417],[329,408],[351,409]]},{"d":33,"u":214,"c":92,"pairs":[[158,404],[159,330],[143,385],[234,315],[290,344],[57,209],[86,316],[102,196],[124,215],[95,321],[98,298],[13,60],[157,376],[165,397],[29,160],[266,346],[145,343],[152,368],[16,66],[17,68],[18,70],[137,299],[166,338],[155,367],[89,310],[94,318],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[163,394],[59,210],[256,360],[113,205],[96,264],[78,244],[81,235],[83,274],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[141,347],[149,331],[262,382],[144,286],[193,282],[132,291],[25,135],[26,112],[130,241],[261,332],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[323,384],[147,284],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[287,364],[178,381],[179,406],[211,420],[167,288],[49,184],[72,151],[308,410],[97,305],[100,328],[248,345],[202,275],[91,174],[93,311],[39,189],[236,413],[242,411],[52,233],[88,317],[280,340],[56,180],[61,148],[243,377],[32,197],[201,270],[246,342],[208,307],[71,259],[219,325],[51,139],[58,198],[239,400],[250,393],[251,398],[253,379],[35,117],[185,386],[231,350],[237,373],[257,365],[121,359],[122,335],[302,358],[225,339],[173,407],[194,399],[252,408],[268,417],[23,85],[218,378],[104,249],[271,403],[247,362],[33,134],[41,182],[37,222],[199,388],[254,372],[224,327],[273,401],[73,203],[84,277],[162,366],[69,289],[43,168],[306,363],[116,357],[118,292],[309,426],[120,356],[125,304],[314,380],[349,412],[229,334],[220,419],[221,374],[230,414],[204,361],[240,395],[245,391],[212,375],[301,424],[341,425],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[14,62],[15,64],[20,75],[22,67],[24,191],[31,169],[45,161],[76,319],[80,272],[82,140],[87,283],[90,190],[99,322],[108,294],[119,313],[123,337],[126,351],[129,369],[131,370],[133,297],[138,333],[150,387],[153,355],[164,409],[170,405],[176,383],[177,421],[183,416],[192,402],[195,392],[200,348],[206,423],[207,418],[214,390],[232,415],[258,428],[300,429],[320,427],[329,422]]},{"d":33,"u":218,"c":94,"pairs":[[205,360],[208,307],[143,385],[271,403],[313,431],[57,209],[86,316],[102,196],[124,215],[95,321],[98,298],[13,60],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[130,322],[133,370],[89,310],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[163,394],[59,210],[191,329],[192,369],[96,264],[78,244],[81,235],[83,274],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[141,347],[149,331],[262,382],[123,320],[126,337],[132,291],[25,135],[26,112],[319,430],[183,433],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[287,364],[178,381],[232,434],[254,418],[167,288],[49,184],[72,151],[308,410],[97,305],[100,328],[248,345],[202,275],[91,174],[93,311],[39,189],[153,402],[161,355],[52,233],[88,317],[280,340],[58,200],[76,286],[243,377],[32,197],[201,270],[242,414],[249,419],[259,435],[323,415],[61,230],[71,164],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[231,350],[237,373],[257,365],[121,359],[122,335],[302,358],[225,339],[290,344],[194,399],[252,408],[268,417],[23,85],[218,378],[113,348],[119,343],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[73,203],[84,277],[283,390],[69,289],[80,176],[87,158],[306,363],[116,357],[118,292],[309,426],[241,436],[250,393],[314,380],[349,412],[229,334],[261,428],[120,356],[125,304],[204,361],[214,318],[245,391],[212,375],[301,424],[170,387],[177,423],[193,282],[207,432],[219,325],[246,372],[190,330],[211,409],[220,416],[221,437],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,147],[12,239],[14,75],[15,64],[17,68],[18,70],[20,104],[31,179],[43,131],[45,173],[51,138],[53,108],[54,258],[56,240],[62,162],[90,338],[129,341],[139,383],[140,374],[144,367],[145,384],[148,395],[150,333],[152,351],[155,400],[159,392],[166,406],[169,294],[180,366],[234,422],[236,407],[256,401],[273,315],[332,413],[368,411],[379,427]]},{"d":33,"u":222,"c":96,"pairs":[[236,381],[239,438],[143,385],[271,403],[313,431],[57,209],[86,316],[102,196],[124,215],[95,321],[98,298],[13,60],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[145,368],[147,392],[89,310],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[163,394],[59,210],[191,329],[192,369],[78,244],[81,235],[83,274],[77,255],[146,279],[228,295],[105,285],[109,296],[154,293],[47,115],[141,347],[149,331],[262,382],[123,320],[126,337],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[106,171],[101,213],[110,188],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[221,364],[148,395],[315,440],[332,413],[167,288],[49,184],[72,151],[308,410],[97,305],[100,328],[248,345],[202,275],[91,174],[93,311],[39,189],[153,402],[161,355],[52,233],[88,317],[280,340],[58,200],[76,286],[243,377],[32,197],[201,270],[242,414],[249,419],[259,435],[323,415],[61,230],[71,164],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[231,350],[237,373],[257,365],[131,379],[133,367],[302,358],[225,339],[290,344],[194,399],[252,408],[268,417],[23,85],[218,378],[113,348],[119,343],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[94,333],[121,359],[283,390],[69,289],[56,144],[90,254],[306,363],[116,357],[118,292],[309,426],[258,444],[264,401],[314,380],[349,412],[229,334],[261,428],[120,356],[125,304],[204,361],[214,318],[245,391],[212,375],[301,424],[205,393],[208,445],[193,282],[207,432],[219,325],[246,372],[190,330],[240,443],[241,436],[256,439],[287,383],[273,441],[294,442],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,140],[14,62],[15,64],[17,68],[18,70],[20,150],[31,130],[43,104],[45,87],[54,250],[73,277],[75,159],[80,180],[84,335],[108,341],[122,177],[129,322],[139,351],[152,406],[155,407],[158,411],[162,360],[166,416],[169,409],[170,387],[173,400],[176,422],[178,370],[179,423],[183,338],[203,374],[211,427],[220,433],[232,434],[234,418],[307,384],[366,437]]},{"d":33,"u":226,"c":98,"pairs":[[236,381],[239,438],[143,385],[271,403],[313,431],[57,209],[86,316],[102,196],[124,215],[61,230],[71,164],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[178,378],[179,406],[89,310],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[163,394],[191,395],[192,416],[159,411],[78,244],[81,235],[83,274],[77,255],[146,279],[228,295],[43,104],[45,129],[154,293],[47,115],[161,374],[162,356],[262,382],[123,320],[126,337],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[248,345],[256,451],[259,436],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[294,442],[307,437],[315,440],[332,413],[167,288],[49,184],[72,151],[308,410],[97,305],[218,441],[229,400],[240,443],[91,174],[93,311],[39,189],[122,277],[125,341],[52,233],[88,317],[280,340],[58,200],[76,286],[243,377],[32,197],[201,270],[249,419],[250,418],[273,433],[323,415],[84,338],[87,158],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[231,350],[237,373],[257,365],[131,379],[190,370],[202,275],[241,439],[242,414],[285,384],[322,450],[347,452],[23,85],[152,402],[176,434],[177,423],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[94,333],[121,359],[283,390],[69,289],[56,144],[90,254],[306,363],[116,357],[118,292],[309,426],[258,444],[264,401],[314,380],[349,412],[169,422],[170,427],[130,366],[139,331],[204,361],[214,318],[245,391],[212,375],[301,424],[205,393],[208,445],[193,282],[207,432],[219,325],[246,372],[203,448],[221,364],[232,449],[234,446],[287,383],[261,428],[302,358],[304,453],[153,335],[166,417],[173,369],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,46],[8,48],[9,50],[10,53],[12,54],[13,60],[14,62],[15,64],[17,68],[18,70],[20,225],[31,96],[59,210],[73,328],[75,213],[80,180],[95,351],[100,155],[101,348],[105,298],[106,339],[108,220],[109,344],[110,188],[113,296],[119,368],[120,360],[133,367],[140,194],[141,343],[145,329],[147,334],[148,392],[149,355],[150,290],[171,399],[183,409],[211,387],[252,408],[268,447],[321,435],[330,407]]},{"d":33,"u":230,"c":100,"pairs":[[140,387],[90,254],[105,213],[271,403],[313,431],[57,209],[86,316],[102,196],[124,215],[61,230],[71,164],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[178,378],[179,406],[89,310],[142,216],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[223,396],[139,344],[141,343],[192,416],[159,411],[78,244],[81,235],[83,274],[77,255],[108,173],[110,366],[43,104],[45,129],[154,293],[47,115],[161,374],[162,356],[262,382],[123,320],[126,337],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[248,345],[256,451],[259,436],[27,136],[107,265],[28,172],[30,128],[276,389],[281,371],[294,442],[307,437],[315,440],[332,413],[167,288],[49,184],[72,151],[308,410],[97,305],[218,441],[229,400],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[88,317],[280,340],[58,200],[76,286],[243,377],[32,197],[201,270],[249,419],[250,418],[273,433],[323,415],[84,338],[87,158],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[98,331],[101,155],[145,373],[146,330],[190,370],[202,275],[241,439],[242,414],[236,435],[237,449],[239,422],[23,85],[152,402],[176,434],[91,174],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[94,333],[121,359],[283,390],[69,289],[56,144],[73,150],[306,363],[116,357],[118,292],[309,426],[113,169],[264,401],[314,380],[349,412],[252,392],[149,328],[171,367],[183,334],[204,361],[214,318],[245,391],[212,375],[232,351],[234,460],[119,355],[95,282],[96,358],[207,432],[219,325],[246,372],[225,339],[268,461],[170,427],[177,438],[287,383],[120,360],[130,364],[304,453],[153,335],[166,417],[203,458],[210,348],[188,321],[279,455],[298,454],[257,369],[295,350],[301,379],[302,445],[322,450],[347,452],[1,34],[2,36],[3,38],[4,40],[5,42],[6,46],[7,48],[8,50],[9,60],[10,53],[12,148],[13,62],[14,258],[15,54],[17,64],[31,131],[44,261],[59,296],[68,191],[75,220],[80,329],[106,365],[133,368],[143,385],[147,407],[163,409],[180,428],[193,399],[194,447],[205,393],[208,394],[211,456],[221,424],[228,459],[231,423],[240,444],[285,384],[290,457],[381,448],[395,443],[408,446]]},{"d":33,"u":234,"c":102,"pairs":[[96,270],[100,358],[254,451],[256,424],[268,394],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[178,378],[179,406],[89,310],[183,387],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[249,419],[250,347],[141,343],[192,416],[159,411],[78,244],[81,235],[83,274],[77,255],[108,173],[110,366],[43,104],[45,129],[154,293],[47,115],[161,374],[162,356],[248,399],[259,436],[290,457],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[140,382],[143,391],[30,128],[276,389],[281,371],[196,296],[211,375],[17,68],[61,230],[167,288],[49,184],[72,151],[308,410],[97,305],[218,441],[229,400],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[76,286],[243,377],[32,197],[107,265],[121,365],[148,334],[273,433],[142,408],[84,338],[87,158],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[62,136],[85,258],[145,373],[146,330],[190,370],[202,275],[262,407],[271,434],[236,435],[237,449],[239,422],[15,64],[180,444],[191,456],[91,174],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[94,333],[220,469],[245,381],[69,289],[56,144],[73,150],[306,363],[116,357],[152,402],[214,409],[309,426],[113,169],[264,401],[314,380],[349,412],[252,392],[149,328],[171,367],[221,466],[228,465],[231,423],[105,213],[106,359],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[207,432],[219,325],[163,396],[172,418],[201,464],[170,427],[177,438],[287,383],[120,360],[130,364],[304,453],[153,335],[166,417],[203,458],[210,348],[188,321],[279,455],[298,454],[257,369],[295,350],[301,379],[302,445],[329,428],[307,437],[320,443],[332,413],[345,450],[337,385],[368,462],[1,34],[2,36],[3,38],[4,40],[5,46],[6,194],[7,164],[8,48],[9,118],[10,53],[12,126],[13,242],[14,225],[23,155],[27,147],[28,90],[42,240],[44,282],[50,88],[54,285],[59,205],[60,208],[71,331],[131,318],[133,395],[139,176],[204,439],[212,384],[241,446],[246,463],[292,339],[313,431],[317,461],[344,448],[361,468],[372,414],[390,459],[393,447],[403,442]]},{"d":33,"u":238,"c":104,"pairs":[[96,270],[100,358],[254,451],[237,448],[249,461],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[29,160],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[178,378],[179,406],[89,310],[183,387],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[155,417],[166,431],[141,343],[192,416],[159,411],[78,244],[81,235],[83,274],[77,255],[108,173],[110,366],[45,129],[154,293],[47,115],[161,374],[162,356],[248,399],[259,436],[290,457],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[140,382],[143,391],[30,128],[276,389],[281,371],[196,296],[211,375],[17,68],[61,230],[167,288],[49,184],[72,151],[308,410],[97,305],[218,441],[229,400],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[76,286],[243,377],[32,197],[107,265],[60,164],[71,118],[414,475],[142,408],[84,338],[87,158],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[62,136],[85,258],[145,373],[146,330],[190,370],[202,275],[262,407],[271,434],[236,435],[318,372],[331,393],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[37,222],[199,388],[300,429],[224,327],[168,284],[94,333],[220,469],[245,381],[69,289],[56,144],[73,150],[306,363],[116,357],[152,402],[214,409],[309,426],[113,169],[264,401],[314,380],[349,412],[252,392],[149,328],[171,367],[221,466],[228,465],[231,423],[105,213],[106,359],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[207,432],[219,325],[163,396],[172,418],[201,464],[170,427],[177,438],[287,383],[120,360],[130,364],[304,453],[153,335],[242,477],[246,390],[210,348],[188,321],[279,455],[298,454],[361,468],[368,462],[301,379],[302,445],[329,428],[307,437],[320,443],[332,413],[345,450],[240,471],[241,439],[273,433],[250,422],[257,444],[282,470],[337,446],[1,34],[2,38],[3,121],[4,59],[5,48],[6,176],[7,212],[8,194],[9,46],[10,44],[12,50],[13,54],[14,126],[23,180],[27,256],[28,148],[36,204],[40,295],[42,225],[43,313],[53,88],[90,350],[102,369],[131,395],[147,385],[191,339],[203,447],[205,474],[208,476],[239,456],[268,365],[292,334],[317,449],[344,458],[347,473],[394,442],[403,472],[419,459],[424,463]]},{"d":33,"u":242,"c":106,"pairs":[[273,433],[290,457],[302,485],[237,448],[249,461],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[414,475],[266,346],[272,425],[297,421],[16,66],[22,67],[24,82],[137,299],[178,378],[179,406],[89,310],[183,387],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[155,417],[166,431],[141,343],[192,416],[159,411],[78,244],[81,235],[10,53],[12,54],[13,131],[110,366],[96,270],[100,368],[47,115],[361,473],[385,479],[248,399],[212,484],[218,441],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[19,65],[21,74],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[104,374],[120,394],[30,128],[276,389],[281,371],[196,296],[211,375],[17,68],[61,230],[167,288],[49,184],[72,151],[308,410],[97,305],[154,293],[161,419],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[76,286],[243,377],[32,197],[107,265],[60,164],[292,449],[295,482],[142,408],[28,176],[43,121],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[62,136],[85,258],[145,373],[146,330],[190,370],[202,275],[262,407],[271,434],[236,435],[318,372],[331,393],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[37,222],[199,388],[126,379],[148,334],[168,284],[94,333],[220,469],[245,381],[69,289],[56,144],[73,150],[306,363],[116,357],[191,462],[194,364],[309,426],[113,169],[264,401],[314,380],[349,412],[252,392],[149,328],[171,367],[221,466],[228,465],[231,423],[105,213],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[207,432],[219,325],[163,396],[172,418],[201,464],[170,427],[177,438],[287,383],[313,456],[327,459],[304,453],[153,335],[242,477],[246,390],[210,348],[188,321],[279,455],[298,454],[250,422],[256,424],[257,474],[268,365],[329,428],[307,437],[320,443],[239,483],[254,451],[240,471],[241,439],[344,458],[347,395],[403,472],[282,470],[337,446],[90,359],[259,436],[339,468],[332,413],[345,450],[358,478],[1,34],[2,36],[3,38],[4,59],[5,255],[6,71],[7,44],[8,48],[9,50],[14,140],[23,214],[27,300],[29,224],[40,274],[42,173],[45,152],[46,84],[77,180],[83,350],[87,158],[88,317],[102,356],[108,147],[118,382],[129,369],[130,301],[143,391],[160,338],[162,400],[203,463],[204,409],[205,447],[208,402],[225,480],[229,442],[360,444],[429,476],[445,481]]},{"d":33,"u":246,"c":108,"pairs":[[358,478],[387,490],[302,485],[237,448],[249,461],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[414,475],[266,346],[118,290],[231,423],[274,487],[22,67],[24,82],[137,299],[178,378],[179,406],[88,143],[102,350],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[155,417],[166,431],[141,343],[298,492],[317,488],[78,244],[81,235],[10,53],[12,54],[84,360],[106,273],[96,270],[100,368],[47,115],[361,473],[385,479],[248,399],[382,447],[409,493],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[45,279],[46,87],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[104,374],[442,489],[30,128],[276,389],[281,371],[196,296],[211,375],[17,68],[61,230],[167,288],[49,184])scd";
    r += R"scd(,[72,151],[308,410],[97,305],[297,421],[345,450],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[76,286],[243,377],[32,197],[107,265],[60,164],[292,449],[295,482],[142,408],[28,176],[43,121],[195,404],[198,405],[251,398],[206,420],[35,117],[185,386],[62,136],[85,258],[145,373],[146,330],[190,370],[202,275],[262,407],[271,434],[236,435],[318,372],[331,393],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[37,222],[205,455],[208,483],[212,454],[214,443],[224,429],[148,334],[159,411],[245,381],[69,289],[56,144],[73,150],[306,363],[116,357],[191,462],[194,364],[71,325],[83,239],[160,400],[161,419],[349,412],[252,392],[149,328],[171,367],[221,466],[229,484],[272,425],[105,213],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[110,366],[126,379],[163,396],[172,418],[201,464],[170,427],[177,438],[287,383],[313,456],[327,459],[304,453],[153,335],[242,477],[246,390],[210,348],[188,321],[129,402],[154,293],[300,491],[207,481],[219,486],[220,457],[259,436],[282,470],[307,437],[339,465],[369,476],[240,471],[329,426],[344,458],[347,395],[403,472],[147,391],[152,356],[23,301],[27,158],[337,446],[332,413],[218,441],[90,359],[94,333],[310,433],[314,451],[1,34],[2,36],[3,38],[4,42],[5,254],[6,203],[7,113],[8,268],[9,48],[13,50],[14,131],[16,192],[19,59],[21,120],[29,250],[40,257],[44,173],[65,183],[66,338],[74,130],[77,255],[89,284],[140,256],[162,228],[168,445],[169,394],[180,444],[199,388],[204,428],[225,463],[241,439],[264,432],[309,380],[320,480],[365,401],[416,469],[422,468],[424,474]]},{"d":33,"u":250,"c":110,"pairs":[[7,113],[8,48],[302,485],[388,444],[424,495],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[414,475],[266,346],[118,290],[237,448],[255,494],[264,461],[22,67],[24,82],[137,299],[178,378],[243,468],[249,487],[102,350],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[181,303],[156,226],[227,354],[217,312],[155,417],[320,498],[141,343],[298,492],[317,488],[206,433],[220,396],[228,420],[250,464],[84,360],[106,273],[96,270],[100,368],[47,115],[361,473],[385,479],[248,399],[382,447],[409,493],[132,291],[25,135],[26,112],[319,430],[51,138],[267,352],[127,186],[63,238],[45,279],[46,87],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[104,374],[442,489],[30,128],[276,389],[281,371],[196,296],[211,375],[256,422],[257,490],[309,457],[49,184],[72,151],[308,410],[97,305],[231,496],[274,469],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[94,366],[108,225],[32,197],[107,265],[60,164],[292,449],[295,482],[21,120],[29,310],[43,121],[314,380],[284,497],[306,363],[333,501],[35,117],[185,386],[62,136],[85,258],[145,373],[146,330],[190,370],[202,275],[262,407],[271,434],[195,474],[203,427],[244,451],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[37,222],[205,455],[208,483],[212,454],[50,171],[77,201],[148,334],[159,411],[89,345],[131,268],[69,289],[74,179],[76,297],[116,357],[191,462],[194,364],[71,325],[83,239],[160,400],[161,419],[349,412],[252,392],[149,328],[144,421],[150,387],[229,484],[272,425],[105,213],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[183,432],[192,404],[198,480],[245,381],[251,398],[259,436],[287,383],[313,456],[327,459],[304,453],[153,335],[140,401],[142,230],[288,391],[338,445],[129,402],[154,293],[300,491],[207,481],[219,486],[61,177],[68,331],[282,470],[307,437],[339,465],[166,423],[167,377],[17,56],[19,73],[347,395],[318,478],[358,476],[152,356],[23,301],[27,158],[337,446],[332,413],[218,441],[90,359],[241,439],[172,416],[348,471],[365,499],[403,472],[426,477],[1,34],[2,36],[3,38],[4,40],[5,240],[6,286],[9,147],[10,65],[12,54],[13,242],[14,143],[16,59],[28,78],[42,88],[44,188],[53,130],[66,235],[81,214],[126,390],[162,367],[163,394],[168,428],[169,435],[170,379],[173,372],[176,429],[180,369],[199,236],[204,450],[210,406],[221,466],[224,344],[246,463],[254,408],[321,418],[329,443],[393,431],[405,458],[438,500]]},{"d":33,"u":254,"c":112,"pairs":[[65,162],[97,305],[302,485],[388,444],[424,495],[57,209],[86,316],[124,215],[315,440],[323,415],[157,376],[165,397],[414,475],[266,346],[118,290],[237,448],[255,494],[264,461],[22,67],[24,82],[199,408],[204,435],[210,379],[214,431],[102,350],[111,326],[114,336],[187,263],[260,324],[278,353],[79,269],[155,438],[163,443],[168,393],[235,321],[236,502],[240,394],[141,343],[298,492],[317,488],[206,433],[220,396],[228,420],[250,464],[84,360],[106,273],[96,270],[100,368],[47,115],[361,473],[385,479],[248,399],[382,447],[409,493],[132,291],[25,135],[319,430],[51,138],[267,352],[130,329],[137,390],[143,428],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[104,374],[442,489],[30,128],[276,389],[281,371],[196,296],[211,375],[256,422],[257,490],[309,457],[49,184],[72,151],[308,410],[81,176],[88,217],[274,469],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[87,146],[110,254],[32,197],[107,265],[60,164],[202,275],[221,417],[21,120],[29,310],[43,121],[314,380],[284,497],[306,363],[333,501],[35,117],[185,386],[62,136],[85,258],[145,373],[286,406],[403,472],[426,477],[242,506],[246,508],[249,487],[203,427],[244,451],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[37,222],[205,455],[208,483],[212,454],[50,171],[77,201],[148,334],[159,411],[89,345],[131,268],[69,289],[74,179],[76,297],[116,357],[191,462],[194,364],[71,325],[83,239],[160,400],[161,419],[349,412],[252,392],[149,328],[144,421],[150,387],[450,505],[463,509],[105,213],[261,467],[232,351],[234,460],[119,355],[31,98],[75,322],[183,432],[192,404],[198,480],[245,381],[251,398],[259,436],[287,383],[313,456],[327,459],[304,453],[153,335],[312,474],[405,482],[288,391],[338,445],[129,402],[154,293],[300,491],[207,481],[219,486],[61,177],[68,331],[282,470],[307,437],[339,465],[166,423],[167,377],[17,56],[19,73],[347,395],[318,478],[358,476],[152,356],[23,301],[27,158],[337,446],[332,413],[218,441],[90,359],[241,439],[172,416],[348,471],[365,499],[299,504],[320,498],[344,458],[367,500],[369,507],[1,34],[2,36],[3,38],[4,40],[5,42],[6,48],[7,262],[8,78],[9,126],[10,63],[12,53],[13,188],[14,54],[16,173],[26,226],[28,66],[44,94],[45,229],[46,330],[59,147],[108,271],[113,156],[127,372],[140,401],[142,295],[169,434],[170,449],[178,407],[180,466],[181,303],[186,366],[190,425],[195,429],[224,496],[225,370],[227,354],[230,292],[231,418],[238,484],[243,503],[272,378],[279,468]]},{"d":33,"u":258,"c":114,"pairs":[[298,492],[300,491],[355,432],[388,444],[424,495],[57,209],[86,316],[124,215],[315,440],[170,425],[178,468],[181,303],[414,475],[266,346],[118,290],[237,448],[255,494],[264,461],[22,67],[24,82],[199,408],[204,435],[210,379],[214,431],[102,350],[111,326],[187,263],[260,324],[278,353],[79,269],[155,438],[163,443],[168,393],[235,321],[236,502],[37,222],[45,229],[46,173],[317,488],[206,433],[220,396],[228,420],[250,464],[84,360],[106,273],[96,270],[100,368],[47,115],[361,473],[385,479],[248,399],[382,447],[409,493],[132,291],[25,135],[319,430],[51,138],[267,352],[130,329],[137,390],[143,428],[11,55],[92,253],[99,342],[103,175],[193,452],[95,223],[101,294],[123,216],[104,374],[442,489],[30,128],[276,389],[281,371],[196,296],[169,405],[177,426],[257,490],[309,457],[49,184],[72,151],[308,410],[81,176],[88,217],[274,469],[18,70],[20,109],[93,311],[39,189],[122,277],[125,341],[52,233],[80,283],[280,340],[58,200],[87,146],[110,254],[32,197],[107,265],[60,164],[202,275],[144,421],[147,407],[29,310],[43,121],[314,380],[284,497],[306,363],[333,501],[35,117],[185,386],[62,136],[85,258],[145,373],[192,404],[198,480],[207,481],[227,515],[246,508],[249,487],[203,427],[244,451],[15,64],[133,384],[139,285],[91,174],[247,362],[33,134],[41,182],[63,180],[94,186],[108,354],[112,165],[50,171],[77,201],[148,334],[159,411],[89,345],[131,268],[69,289],[74,179],[76,297],[116,357],[191,462],[194,364],[71,325],[83,239],[160,400],[161,419],[349,412],[252,392],[230,517],[231,466],[238,401],[450,505],[463,509],[105,213],[261,467],[232,351],[234,460],[141,343],[142,403],[149,328],[150,387],[366,472],[415,477],[245,381],[251,398],[259,436],[287,383],[313,456],[327,459],[304,453],[153,335],[312,474],[113,397],[126,279],[127,272],[129,402],[154,293],[240,394],[323,512],[330,513],[288,391],[68,331],[282,470],[307,437],[339,465],[166,423],[167,377],[17,56],[19,73],[347,395],[318,478],[358,476],[152,356],[23,301],[27,158],[337,446],[332,413],[218,441],[90,359],[241,439],[172,416],[348,471],[365,499],[299,504],[320,498],[369,507],[375,482],[376,496],[406,503],[205,455],[208,483],[212,454],[1,34],[2,36],[3,38],[4,40],[5,42],[6,44],[7,48],[8,195],[9,78],[10,53],[12,54],[13,221],[14,243],[16,66],[21,61],[26,271],[28,295],[31,188],[59,225],[65,344],[75,322],[97,211],[98,262],[119,338],[120,190],[140,372],[156,445],[157,256],[162,434],[183,417],[219,484],[224,510],[226,422],[242,506],[286,486],[292,514],[302,418],[305,485],[336,511],[367,500],[370,458],[378,429],[449,516]]}],"chdms":[{"id":"L5.4:t=14","w":2,"t":14,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,5,6,7,8,9,10,11,12,13,15,16,17,18,19,20,21,22,23,24,25,26,27],[16,1,4,2,26,3,10,13,15,20,22,24,8,23,25,7,9,21,5,17,11,27,12,19,18,6]]},{"id":"L5.4:t=15","w":2,"t":15,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,16,17,18,19,20,21,22,23,24,25,26,27,28,29],[2,4,6,8,10,12,14,16,18,20,23,28,27,1,29,5,7,9,11,13,3,17,19,21,24,26,25,22]]},{"id":"L5.5:t=5","w":4,"t":5,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,6,7,8,9,11,12,13,14,16,17,18,19],[2,4,6,8,12,14,17,1,19,3,7,11,9,13,16,18]]},{"id":"L5.5:t=8","w":4,"t":8,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,5,6,7,9,10,11,12,13,14,15,17,18,19,20,21,22,23,25,26,27,28,29,30,31],[2,4,6,9,11,10,14,18,20,22,25,27,29,1,5,3,31,7,12,15,13,19,21,23,17,26,28,30]]},{"id":"L5.5:t=11","w":4,"t":11,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,5,6,7,8,9,10,12,13,14,15,16,17,18,19,20,21,23,24,25,26,27,28,29,30,31,32,34,35,36,37,38,39,40,41,42,43],[2,4,6,8,10,12,14,16,18,24,25,28,26,31,41,43,35,38,40,39,7,17,5,3,15,13,23,9,21,27,20,1,19,34,30,37,36,32,29,42]]},{"id":"L5.6:x=3,t=6","w":8,"t":6,"rows":[[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],[1,2,3,4,5,7,8,9,10,11,13,14,15,16,17,19,20,21,22,23,25,26,27,28,29,31,32,33,34,35,37,38,39,40,41,43,44,45,46,47],[2,4,7,9,8,14,16,19,21,20,26,28,31,33,32,38,40,43,47,46,3,5,10,1,13,11,17,22,15,25,23,29,34,27,37,35,41,44,39,45]]}],"designs":[{"id":"L6.7","n":6,"m":3,"t":3,"seeds":[[[0,0],[1,1],[3,2]],[[0,0],[1,2],[3,4]],[[0,0],[1,4],[5,8]],[[0,0],[1,5],[4,1]],[[0,0],[1,7],[5,5]],[[0,0],[2,8],[5,1]]],"expand":"rot5"},{"id":"L6.11:p=3","n":6,"m":2,"t":3,"blocks":[[[0,0],[1,1],[2,2]],[[0,0],[2,1],[1,2]],[[0,0],[3,1],[4,2]],[[0,0],[4,1],[3,2]],[[0,0],[5,1],[1,5]],[[0,0],[5,2],[1,4]],[[0,0],[2,4],[3,5]],[[0,0],[3,4],[2,5]],[[0,0],[4,4],[5,5]],[[0,0],[5,4],[4,5]],[[1,0],[3,1],[4,5]],[[1,0],[4,1],[2,2]],[[1,0],[5,1],[3,5]],[[1,0],[3,2],[4,4]],[[1,0],[4,2],[2,4]],[[1,0],[3,4],[5,5]],[[2,0],[4,1],[5,5]],[[2,0],[5,1],[3,2]],[[2,0],[4,2],[5,4]],[[2,0],[5,2],[3,4]]]},{"id":"L7.1","n":10,"m":2,"t":3,"s":2,"order":5,"seeds":[[0,11,22],[0,12,21],[0,13,25],[0,14,51],[0,15,28],[0,16,24],[0,17,53],[0,23,41],[0,26,43],[0,29,45],[0,49,55],[1,15,23]],"status":"ok"},{"id":"L7.2","n":15,"m":2,"t":3,"s":3,"order":5,"seeds":[[0,16,32],[0,17,31],[0,18,37],[0,20,33],[0,21,34],[0,22,35],[0,23,39],[0,24,36],[0,25,42],[0,26,38],[0,29,40],[0,41,61],[0,43,62],[0,44,65],[0,64,76],[0,67,86],[0,68,85],[0,70,79],[0,71,80],[0,73,83],[0,74,82],[1,19,40],[1,23,43],[1,32,65],[1,34,62],[1,37,74],[1,41,68],[2,20,41]],"status":"ok"},{"id":"L7.3","n":18,"m":2,"t":3,"s":6,"order":3,"seeds":[[0,32,52],[0,49,73],[0,50,74],[0,51,86],[0,76,97],[0,77,91],[0,79,101],[0,80,103],[0,82,94],[0,83,104],[0,85,98],[0,88,37],[0,19,38],[0,20,39],[0,21,40],[0,22,41],[0,23,42],[0,24,53],[0,25,45],[0,26,43],[0,27,44],[0,28,48],[0,30,46],[0,31,47],[0,33,92],[0,35,93],[0,75,95],[0,81,105],[0,87,99],[0,89,100],[1,22,38],[1,25,39],[1,26,40],[1,27,41],[1,28,45],[1,29,44],[1,31,46],[1,47,74],[1,49,80],[1,51,75],[1,53,76],[1,77,93],[1,81,94],[1,82,105],[1,83,100],[1,86,107],[1,87,98],[1,88,99],[1,89,101],[2,26,39],[2,27,50],[2,28,41],[2,29,52],[2,32,47],[2,40,82],[2,45,88],[2,46,89],[2,53,87],[2,76,100],[2,77,101],[2,81,106],[3,29,51],[3,40,88],[3,41,83],[3,47,82],[3,52,89],[3,76,101],[4,53,83]],"status":"ok"},{"id":"L7.4","n":27,"m":2,"t":3,"s":3,"order":9,"seeds":[[0,28,56],[0,29,55],[0,30,61],[0,32,57],[0,33,58],[0,34,59],[0,35,63],[0,36,60],[0,37,66],[0,38,62],[0,39,65],[0,40,64],[0,41,70],[0,42,136],[0,43,73],[0,44,67],[0,45,68],[0,46,69],[0,47,77],[0,48,140],[0,49,71],[0,72,124],[0,74,109],[0,75,128],[0,76,111],[0,110,142],[0,112,143],[0,113,146],[0,115,148],[0,116,154],[0,118,157],[0,122,158],[0,125,145],[0,130,151],[0,131,149],[0,133,152],[0,134,155],[1,35,70],[1,37,74],[1,41,56],[1,43,59],[1,46,149],[1,58,110],[1,61,122],[1,64,112],[1,65,125],[1,67,116],[1,68,118],[1,71,119],[1,134,146],[2,59,122],[2,68,113]],"status":"ok"}]})scd";
    return r;
  }();
  return s;
}

}  // namespace scd::detail
