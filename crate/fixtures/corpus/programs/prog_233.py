# fixture program 233
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
visited_nodes = {352, 434, 134, 275, 274, 289}
visited_nodes.add(7)
print(len(visited_nodes))
profile = {'name': 'Grace', 'age': 61, 'city': 'berlin'}
print(profile['name'])
author = 'Grace'
print('Hello,', author)
resolution = (128, 32)
width, height = resolution
print('size', resolution)
distance = -17.8
print('measured', distance)
rounded = round(distance, 1)
recent_items = collections.deque([2028, 2014, 1996, 2004], maxlen=10)
print(len(recent_items))
recent_items.append(5)
current_year = 1991
if current_year > 2000:
    print('recent')
decade = current_year - current_year % 10
status = 'german'
print('mode', status)
best_model = None
if best_model is None:
    print('empty')
file_path = '/var/www/butter_64.parquet'
extension = os.path.splitext(file_path)[1]
customer_id = 492972
print('id', customer_id)
base_url = 'https://summer.com/wizard/61'
print('GET', base_url)
color_rgb = (174, 159, 67)
red_channel = color_rgb[0]
s = 'Anchor zebra market jungle'
fn = '/tmp/stone_14.parquet'
s = 'Needle cloud stone.'
for loop_round in range(3):
    f1_score = 0.628
    print(f1_score)
