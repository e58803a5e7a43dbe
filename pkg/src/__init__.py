# TSB 角位移估计仿真系统 - 主模块
