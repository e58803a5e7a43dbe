# 项目配置包
