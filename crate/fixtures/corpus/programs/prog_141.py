# fixture program 141
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
is_training = True
if is_training:
    print('yes')
if not is_training:
    print('no')
is_training = False
model = LinearModel(10)
prediction = model.predict([1, 2, 3])
product_id = 552536
lookup_key = str(product_id)
product_id = 390560
message = 'Bridge castle needle summer engine needle saddle meadow'
print(message)
message = message.strip()
arguments = {'name': 'London', 'mode': 'closed'}
print(arguments.get('seed'))
file_list = ['/var/www/tunnel_88.xml', '/tmp/yellow_12.csv', 'logs/garden_42.log', 'input/ladder_91.parquet', 'logs/wizard_63.tsv']
print(len(file_list), 'files')
weights_list = [26.44, 71.42]
weights_list.sort()
background = (245, 213, 233)
red_channel = background[0]
background = (40, 10, 30)
parent = None
if parent is None:
    print('empty')
input_file = '/tmp/cloud_8.txt'
extension = os.path.splitext(input_file)[1]
pair_xy = (29, 35)
print('at', pair_xy)
pair_xy = (49, -19)
x = 211.69
i = 179
for loop_round in range(3):
    release_year = 2020
    print(release_year)
