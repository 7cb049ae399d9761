# fixture program 198
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


def main():
    sequence_items = ['first', 'second', 'third']
    homepage = 'https://rabbit.com/butter/529'
    print('GET', homepage)
    host = homepage.split('/')[2]
    kernel_matrix = np.arange(18).reshape(3, 6)
    kernel_matrix = kernel_matrix * 2
    total = kernel_matrix.sum()
    full_name = 'Grace'
    initial = full_name[0]
    upper_name = full_name.upper()
    settings = {'lr': 0.01}
    print(settings.get('seed'))
    attribute = 'stone_id'
    print('column', attribute)
    lookup = {attribute: 0}
    attribute = 'bridge_ladder'
    numbers = [2020, 2019, 2011, 2011]
    numbers.append(1)
    today = datetime.datetime(2011, 9, 20, 6, 12)
    iso = today.isoformat()
    keywords_list = ['bob']
    for element in keywords_list:
        print(element)
    keywords_list.append('extra')
    history = collections.deque([12, 5, 11, 17, 38, 10], maxlen=10)
    print(len(history))
    history = collections.deque([36, 10, 10, 18, 2, 14, 40, 5, 33, 0, 36], maxlen=10)
    paths = ['/tmp/wizard_65.json']
    print(len(paths), 'files')
    paths = ['output/saddle_51.xml', '/tmp/yellow_25.txt', '/var/www/anchor_73.log']
    accuracy = 0.538
    if accuracy < 0.9:
        print('low')
    print('ratio %.3f' % accuracy)
    accuracy = 0.582
    year_range = list(range(1976, 1984))
    print(len(year_range))
    session_id = 340830
    print('id', session_id)
    raw_bytes = 'Vector river ladder yellow rabbit'.encode()
    decoded = raw_bytes.decode()
    print(len(raw_bytes))
    a = 19615
    a = 99053
    a = 87015
    for loop_round in range(2):
        user_age = 38
        print(user_age)


main()
