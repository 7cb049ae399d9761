# fixture program 156
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
visited_nodes = {106, 57, 377, 161, 375, 240}
print(len(visited_nodes))
path = '../data/candle_8.csv'
print(os.path.basename(path))
extension = os.path.splitext(path)[1]
start_year = 1984
decade = start_year - start_year % 10
if start_year > 2000:
    print('recent')
email = 'trent.bridge@castle.com'
print('mail to', email)
domain = email.split('@')[1]
p_value = 0.4841
p_value = min(1.0, max(0.0, p_value))
print('p=%.2f' % p_value)
total_count = 13177
total_count += 1
api_url = 'https://butter.com/anchor/777'
host = api_url.split('/')[2]
percentage = 0.46
if percentage < 0.9:
    print('low')
print('ratio %.3f' % percentage)
longitude = -18.8
rounded = round(longitude, 1)
ids = []
print(len(ids))
k = 216
k = 154
for loop_round in range(2):
    alpha = 0.05
    print(alpha)
