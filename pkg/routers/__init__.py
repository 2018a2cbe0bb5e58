# 路由模块